#include "altsent/senti.hpp"

// Mirrors data/lexicon/; a unit test keeps the two in sync.

namespace altsent::senti {

namespace {

constexpr std::string_view kStrengths = R"lex(# term	signed strength (2..5 positive, -2..-5 negative)
alarming	-3
amazing	4
angry	-3
awesome	4
awful	-4
bad	-3
beautiful	3
best	3
better	2
bias	-2
biased	-3
breakthrough	3
brilliant	4
clever	2
concerning	-2
congrats	3
congratulations	3
controversial	-2
cool	2
crap	-4
crisis	-3
dangerous	-3
deadly	-4
death	-3
decline	-2
disappointed	-3
disappointing	-3
disease	-2
doubt	-2
dubious	-3
elegant	3
enjoy	2
enjoyed	2
error	-2
errors	-2
excellent	4
excited	3
exciting	3
fail	-3
failed	-3
failure	-3
fake	-3
fantastic	4
fascinating	3
fear	-3
flawed	-3
fraud	-4
fun	2
glad	3
good	2
great	3
greater	2
happy	4
harm	-3
harmful	-3
hate	-4
helpful	2
hope	2
hopeful	2
horrible	-4
important	2
impressive	3
insightful	3
inspiring	3
interested	2
interesting	2
killing	-4
like	2
love	3
loved	3
misconduct	-4
misleading	-3
nice	2
nonsense	-3
novel	2
outstanding	4
pain	-3
perfect	4
pleased	3
poor	-2
positive	2
pretty	2
problem	-2
problems	-2
promising	3
proud	3
recommend	2
remarkable	3
retracted	-3
retraction	-3
risk	-2
sad	-3
sadly	-2
scary	-3
shame	-3
shocking	-3
special	2
stupid	-3
success	3
successful	3
superb	4
terrible	-4
thank	2
thanks	2
toxic	-3
ugly	-3
unfortunately	-2
useful	2
useless	-3
valuable	2
wonderful	4
worried	-3
worrying	-3
worse	-3
worst	-4
wow	3
wrong	-2
)lex";

constexpr std::string_view kBoosters = R"lex(# term	magnitude delta
absolutely	1
barely	-1
extremely	1
few	-1
highly	1
immensely	1
incredibly	1
little	-1
most	1
much	1
really	1
slightly	-1
so	1
some	-1
somewhat	-1
super	1
truly	1
very	1
)lex";

constexpr std::string_view kInverters = R"lex(# one negation word per line
cannot
hardly
neither
never
no
nobody
none
nor
not
nothing
without
)lex";

}  // namespace

std::string_view seed_strength_text() noexcept { return kStrengths; }
std::string_view seed_booster_text() noexcept { return kBoosters; }
std::string_view seed_inverter_text() noexcept { return kInverters; }

}  // namespace altsent::senti

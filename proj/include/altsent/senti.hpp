#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altsent/diagnostics.hpp"

namespace altsent::senti {

inline constexpr int kMinStrength = 2;
inline constexpr int kMaxStrength = 5;

/// Dual-polarity strength: positive in [1,5], negative in [-5,-1].
struct SentimentScore {
  int positive = 1;
  int negative = -1;

  friend auto operator<=>(const SentimentScore&, const SentimentScore&) = default;
};

enum class Label { Positive, Negative, Neutral };

std::string_view label_name(Label l) noexcept;
std::optional<Label> parse_label(std::string_view s) noexcept;

/// Term strengths plus the booster, inverter and spelling tables the scorer
/// consults. Keys are lowercase.
struct StrengthLexicon {
  std::map<std::string, int> term_strengths;  // |strength| in [2,5]
  std::map<std::string, int> boosters;        // signed magnitude delta
  std::set<std::string> inverters;
  std::set<char> allowed_doubles = default_allowed_doubles();
  std::map<std::string, int> emoticons;  // matched verbatim, no modifiers

  static std::set<char> default_allowed_doubles();

  /// Throws std::invalid_argument when a strength is out of range or the
  /// term, booster and inverter key sets overlap.
  void validate() const;
};

StrengthLexicon parse_strength_list(std::istream& in, std::string_view source, Diagnostics& diag);
void parse_boosters(StrengthLexicon& lex, std::istream& in, std::string_view source,
                    Diagnostics& diag);
void parse_inverters(StrengthLexicon& lex, std::istream& in, std::string_view source,
                     Diagnostics& diag);

/// Reads "term TAB signed-strength" lines. Strengths outside +-2..+-5 are
/// rejected and duplicates keep the last value, both with a warning.
StrengthLexicon load_strength_lexicon(const std::filesystem::path& path, Diagnostics& diag);
/// "term TAB delta" lines. Keys that collide with a term or inverter are skipped.
void load_boosters(StrengthLexicon& lex, const std::filesystem::path& path, Diagnostics& diag);
/// One word per line.
void load_inverters(StrengthLexicon& lex, const std::filesystem::path& path, Diagnostics& diag);
/// "emoticon TAB signed-strength" lines.
void load_emoticons(StrengthLexicon& lex, const std::filesystem::path& path, Diagnostics& diag);

void write_strength_list(std::ostream& out, const StrengthLexicon& lex);

/// The seed lexicon bundled with the library (also under data/lexicon/).
StrengthLexicon seed_lexicon();
std::string_view seed_strength_text() noexcept;
std::string_view seed_booster_text() noexcept;
std::string_view seed_inverter_text() noexcept;

/// Squeezes letter runs longer than two down to two, then reduces doubles
/// of letters outside `allowed_doubles` to one. An elongated run at the end
/// of the word collapses to a single letter ("soooo" -> "so").
std::string correct_spelling(std::string_view token,
                             const std::set<char>& allowed_doubles =
                                 StrengthLexicon::default_allowed_doubles());

/// Lookup keys tried in order for a token: itself, its spelling
/// correction, and the correction with an elongated final letter kept doubled.
std::vector<std::string> spelling_candidates(std::string_view token,
                                             const std::set<char>& allowed_doubles);

SentimentScore score_text(const StrengthLexicon& lex, std::string_view text);

Label classify_trinary(SentimentScore score) noexcept;

struct LabeledText {
  std::string text;
  Label label;
};

struct StrengthChange {
  std::string term;
  int from = 0;
  int to = 0;
  long gain = 0;
  std::size_t pass = 0;
};

struct OptimizeResult {
  StrengthLexicon lexicon;
  std::vector<StrengthChange> log;
  std::size_t passes = 0;
  bool converged = false;
  std::size_t correct_before = 0;
  std::size_t correct_after = 0;
};

std::size_t count_correct(const StrengthLexicon& lex, std::span<const LabeledText> corpus);

/// Hill-climbs term strengths one unit at a time, keeping a change only when
/// it fixes at least `min_gain` more texts than it breaks. Terms are visited
/// in lexicographic order; passes repeat until nothing changes.
/// Throws std::invalid_argument on an empty corpus.
OptimizeResult optimize_strengths(StrengthLexicon lex, std::span<const LabeledText> corpus,
                                  long min_gain = 2, std::size_t max_passes = 100);

}  // namespace altsent::senti

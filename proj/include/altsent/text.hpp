#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace altsent::text {

/// Lowercases ASCII letters and the Latin-1 supplement block (U+00C0..U+00DE).
std::string to_lower(std::string_view s);

bool is_ascii(std::string_view s) noexcept;

/// Splits on ASCII whitespace; never yields empty tokens.
std::vector<std::string> split_ws(std::string_view s);

std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");

/// Strips leading and trailing ASCII punctuation. Interior characters are kept.
std::string_view strip_punct(std::string_view token) noexcept;

bool has_alpha(std::string_view s) noexcept;

/// Removes bytes that do not form valid UTF-8 and every U+FFFD code point.
std::string scrub_utf8(std::string_view s);

}  // namespace altsent::text

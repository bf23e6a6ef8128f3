#include "altsent/preprocess.hpp"

#include <array>
#include <cctype>
#include <fstream>

#include <fmt/format.h>

#include "altsent/text.hpp"

namespace altsent::preprocess {

namespace {

bool is_alnum(char c) noexcept { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

bool ieq_prefix(std::string_view s, std::size_t pos, std::string_view prefix) noexcept {
  if (pos + prefix.size() > s.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if (std::tolower(static_cast<unsigned char>(s[pos + k])) != prefix[k]) return false;
  }
  return true;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

struct NamedEntity {
  std::string_view name;
  char32_t cp;
};

constexpr std::array<NamedEntity, 20> kEntities{{
    {"amp", U'&'},       {"lt", U'<'},        {"gt", U'>'},        {"quot", U'"'},
    {"apos", U'\''},     {"nbsp", U' '},      {"hellip", U'…'}, {"mdash", U'—'},
    {"ndash", U'–'}, {"lsquo", U'‘'}, {"rsquo", U'’'}, {"ldquo", U'“'},
    {"rdquo", U'”'}, {"copy", U'©'},  {"reg", U'®'},  {"trade", U'™'},
    {"eacute", U'é'}, {"laquo", U'«'}, {"raquo", U'»'}, {"deg", U'°'},
}};

// Parses a character reference starting at s[pos] == '&'. On success returns
// the code point and sets `len` to the reference length including ';'.
std::optional<char32_t> parse_reference(std::string_view s, std::size_t pos, std::size_t& len) {
  const auto semi = s.find(';', pos + 1);
  if (semi == std::string_view::npos || semi - pos > 12) return std::nullopt;
  const auto body = s.substr(pos + 1, semi - pos - 1);
  if (body.empty()) return std::nullopt;
  len = semi - pos + 1;
  if (body[0] == '#') {
    const bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
    const auto digits = body.substr(hex ? 2 : 1);
    if (digits.empty()) return std::nullopt;
    char32_t cp = 0;
    for (char c : digits) {
      int v = 0;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (hex && std::isxdigit(static_cast<unsigned char>(c))) {
        v = std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
      } else {
        return std::nullopt;
      }
      cp = cp * (hex ? 16 : 10) + static_cast<char32_t>(v);
      if (cp > 0x10FFFF) return std::nullopt;
    }
    if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
    return cp;
  }
  const auto lowered = text::to_lower(body);
  for (const auto& e : kEntities) {
    if (e.name == lowered) return e.cp;
  }
  return std::nullopt;
}

// Matches an HTML tag such as <i>, </i> or <a href="...">.
std::size_t tag_length(std::string_view s, std::size_t pos) {
  std::size_t k = pos + 1;
  if (k < s.size() && s[k] == '/') ++k;
  if (k >= s.size() || !std::isalpha(static_cast<unsigned char>(s[k]))) return 0;
  while (k < s.size() && s[k] != '>' && s[k] != '<') ++k;
  if (k >= s.size() || s[k] != '>') return 0;
  return k - pos + 1;
}

bool is_url_char(char c) noexcept { return is_alnum(c) || c == '.' || c == '/'; }

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Number of UTF-8 code points.
std::size_t char_count(std::string_view s) noexcept {
  std::size_t n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

bool is_word_core(std::string_view w) {
  for (char c : w) {
    if (!is_alnum(c)) return false;
  }
  return !w.empty();
}

}  // namespace

ContractionTable ContractionTable::defaults() {
  ContractionTable t;
  t.set("don't", "do not");
  t.set("won't", "will not");
  t.set("can't", "can not");
  t.set("didn't", "did not");
  t.set("doesn't", "does not");
  t.set("wouldn't", "would not");
  t.set("isn't", "is not");
  t.set("aren't", "are not");
  t.set("wasn't", "was not");
  t.set("weren't", "were not");
  t.set("haven't", "have not");
  t.set("hasn't", "has not");
  t.set("couldn't", "could not");
  t.set("shouldn't", "should not");
  return t;
}

ContractionTable ContractionTable::load(const std::filesystem::path& path, Diagnostics& diag) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open contraction table {}", path.string()));
  ContractionTable t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      diag.warn(fmt::format("{}:{}: expected 'contraction<TAB>expansion'", path.string(), line_no));
      continue;
    }
    t.set(line.substr(0, tab), line.substr(tab + 1));
  }
  return t;
}

void ContractionTable::set(std::string contraction, std::string expansion) {
  entries_[text::to_lower(contraction)] = text::to_lower(expansion);
}

const std::unordered_set<std::string>& stopwords() {
  static const std::unordered_set<std::string> words{
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "your", "yours",
      "yourself", "yourselves", "he", "him", "his", "himself", "she", "her", "hers", "herself",
      "it", "its", "itself", "they", "them", "their", "theirs", "themselves", "what", "which",
      "who", "whom", "this", "that", "these", "those", "am", "is", "are", "was", "were", "be",
      "been", "being", "have", "has", "had", "having", "do", "does", "did", "doing", "a", "an",
      "the", "and", "but", "if", "or", "because", "as", "until", "while", "of", "at", "by",
      "for", "with", "about", "against", "between", "into", "through", "during", "before",
      "after", "above", "below", "to", "from", "up", "down", "in", "out", "on", "off", "over",
      "under", "again", "further", "then", "once", "here", "there", "when", "where", "why",
      "how", "all", "any", "both", "each", "few", "more", "most", "other", "some", "such", "no",
      "nor", "not", "only", "own", "same", "so", "than", "too", "very", "can", "will", "just",
      "should", "now", "would", "could", "don't", "won't", "can't", "didn't", "doesn't",
      "wouldn't", "isn't", "aren't", "wasn't", "weren't", "haven't", "hasn't", "couldn't",
      "shouldn't", "it's", "i'm", "we're", "you're", "they're", "that's", "there's"};
  return words;
}

bool is_english(std::string_view input, double threshold) {
  std::size_t words = 0;
  std::size_t hits = 0;
  bool all_ascii = true;
  bool all_plain = true;
  for (const auto& tok : text::split_ws(input)) {
    if (tok.front() == '@' || ieq_prefix(tok, 0, "http://") || ieq_prefix(tok, 0, "https://") ||
        ieq_prefix(tok, 0, "www.")) {
      continue;
    }
    const auto core = text::to_lower(text::strip_punct(tok));
    if (!text::has_alpha(core)) continue;
    ++words;
    if (stopwords().contains(core)) ++hits;
    if (!text::is_ascii(core)) all_ascii = false;
    if (!is_word_core(core)) all_plain = false;
  }
  if (words == 0) return false;
  const double ratio = static_cast<double>(hits) / static_cast<double>(words);
  if (ratio >= threshold) return true;
  if (words < 3 && all_plain) return true;
  // Pure-ASCII text carries no evidence of another script; relax the bar.
  return all_ascii && hits >= 1 && ratio >= threshold / 2.0;
}

std::string expand_negations(std::string_view s, const ContractionTable& table) {
  std::string out;
  out.reserve(s.size() + 16);
  std::size_t i = 0;
  while (i < s.size()) {
    const bool boundary_before = i == 0 || !is_alnum(s[i - 1]);
    bool replaced = false;
    if (boundary_before && std::isalpha(static_cast<unsigned char>(s[i]))) {
      for (const auto& [key, expansion] : table.entries()) {
        // Match `key` case-insensitively; its apostrophe also matches U+2019.
        std::size_t k = i;
        bool ok = true;
        for (char kc : key) {
          if (k >= s.size()) {
            ok = false;
            break;
          }
          if (kc == '\'' && s.compare(k, 3, "\xE2\x80\x99") == 0) {
            k += 3;
          } else if (std::tolower(static_cast<unsigned char>(s[k])) == kc) {
            ++k;
          } else {
            ok = false;
            break;
          }
        }
        if (ok && (k == s.size() || !is_alnum(s[k]))) {
          out += expansion;
          i = k;
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) out += s[i++];
  }
  return out;
}

std::string remove_title_terms(std::string_view input, std::string_view title,
                               std::size_t min_len) {
  if (title.empty()) return std::string(input);
  std::unordered_set<std::string> title_terms;
  for (const auto& tok : text::split_ws(title)) {
    title_terms.insert(text::to_lower(text::strip_punct(tok)));
  }

  std::vector<std::string> kept;
  for (const auto& tok : text::split_ws(input)) {
    const auto core_view = text::strip_punct(tok);
    const auto core = text::to_lower(core_view);
    if (char_count(core) < min_len || stopwords().contains(core) || !title_terms.contains(core)) {
      kept.push_back(tok);
      continue;
    }
    const auto begin = static_cast<std::size_t>(core_view.data() - tok.data());
    const auto residue = tok.substr(0, begin) + tok.substr(begin + core_view.size());
    if (!residue.empty() && !kept.empty()) kept.back() += residue;
  }
  return text::join(kept);
}

std::string decode_html(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '&') {
      std::size_t len = 0;
      if (const auto cp = parse_reference(s, i, len)) {
        append_utf8(out, *cp);
        i += len;
        continue;
      }
    } else if (s[i] == '<') {
      if (const auto len = tag_length(s, i)) {
        out += ' ';
        i += len;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

std::string strip_mentions(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '@' && i + 1 < s.size() && (is_alnum(s[i + 1]) || s[i + 1] == '_')) {
      std::size_t k = i + 1;
      while (k < s.size() && (is_alnum(s[k]) || s[k] == '_')) ++k;
      if (k < s.size() && s[k] == ':') ++k;
      i = k;
      continue;
    }
    out += s[i++];
  }
  return out;
}

std::string strip_urls(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t scheme = 0;
    if (ieq_prefix(s, i, "https://")) {
      scheme = 8;
    } else if (ieq_prefix(s, i, "http://")) {
      scheme = 7;
    }
    if (scheme && i + scheme < s.size() && is_url_char(s[i + scheme])) {
      std::size_t k = i + scheme;
      while (k < s.size() && is_url_char(s[k])) ++k;
      i = k;
      continue;
    }
    if (ieq_prefix(s, i, "www.") && i + 4 < s.size() && !is_space(s[i + 4])) {
      std::size_t k = i + 4;
      while (k < s.size() && !is_space(s[k])) ++k;
      i = k;
      continue;
    }
    out += s[i++];
  }
  return out;
}

std::string normalize(std::string_view raw, const Config& config) {
  std::string current(raw);
  // Removing one pattern can expose another ("&amp;lt;", "@#user"), so the
  // removal steps run to a fixed point.
  for (;;) {
    auto next = decode_html(current);
    next = strip_mentions(next);
    next = strip_urls(next);
    next = text::scrub_utf8(next);
    std::erase(next, '#');
    if (next == current) break;
    current = std::move(next);
  }
  current = expand_negations(current, config.contractions);
  return text::to_lower(text::join(text::split_ws(current)));
}

CleanTweet clean_tweet(const Tweet& raw, std::optional<std::string_view> title,
                       const Config& config) {
  CleanTweet out{raw.altmetric_id, raw.tweet_id, normalize(raw.text, config), raw.posted_at,
                 raw.label, std::nullopt};
  if (out.text.empty()) {
    out.dropped = DropReason::Empty;
    return out;
  }
  if (!is_english(out.text, config.english_threshold)) {
    out.dropped = DropReason::NonEnglish;
    return out;
  }
  if (title && !title->empty()) {
    out.text = remove_title_terms(out.text, *title, config.title_min_token_len);
    if (out.text.empty()) {
      out.dropped = DropReason::Empty;
    } else if (!is_english(out.text, config.english_threshold)) {
      // Only punctuation left; a rerun would drop it too.
      out.dropped = DropReason::NonEnglish;
    }
  }
  return out;
}

bool Deduper::admit(CleanTweet& t) {
  if (!t.kept()) return false;
  if (!seen_.emplace(t.altmetric_id, t.text).second) {
    t.dropped = DropReason::Duplicate;
    return false;
  }
  return true;
}

void dedupe(std::span<CleanTweet> tweets) {
  Deduper d;
  for (auto& t : tweets) d.admit(t);
}

}  // namespace altsent::preprocess

#include "altsent/senti.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "altsent/text.hpp"

namespace altsent::senti {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<int> parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

// Calls fn(line_no, key, value) for every "key TAB value" line.
template <typename Fn>
void for_each_pair(std::istream& in, std::string_view source, Diagnostics& diag, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tab = body.find('\t');
    if (tab == std::string_view::npos) {
      diag.warn(fmt::format("{}:{}: expected 'term<TAB>value'", source, line_no));
      continue;
    }
    const auto key = text::to_lower(trim(body.substr(0, tab)));
    const auto value = parse_int(body.substr(tab + 1));
    if (key.empty() || !value) {
      diag.warn(fmt::format("{}:{}: malformed entry '{}'", source, line_no, body));
      continue;
    }
    fn(line_no, key, *value);
  }
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open lexicon file {}", path.string()));
  return in;
}

bool in_band(int strength) noexcept {
  const int m = std::abs(strength);
  return m >= kMinStrength && m <= kMaxStrength;
}

int sign_of(int v) noexcept { return v < 0 ? -1 : 1; }

bool is_terminator(char c) noexcept { return c == '.' || c == '!' || c == '?'; }

enum class ItemKind { Plain, Term, Booster, Inverter };

struct Item {
  ItemKind kind = ItemKind::Plain;
  int value = 0;  // strength for Term, delta for Booster
};

struct Sentence {
  std::vector<Item> items;
  std::vector<int> strengths;       // per item, 0 when not an emotion term
  std::vector<std::size_t> boosts;  // item indices receiving a '!!' boost
  bool exclaimed = false;
};

template <typename Map>
const typename Map::mapped_type* find_candidate(const Map& m,
                                                const std::vector<std::string>& keys) {
  for (const auto& k : keys) {
    if (const auto it = m.find(k); it != m.end()) return &it->second;
  }
  return nullptr;
}

Item classify_word(const StrengthLexicon& lex, std::string_view core) {
  const auto keys = spelling_candidates(core, lex.allowed_doubles);
  for (const auto& k : keys) {
    if (lex.inverters.contains(k)) return {ItemKind::Inverter, 0};
  }
  if (const auto* d = find_candidate(lex.boosters, keys)) return {ItemKind::Booster, *d};
  if (const auto* s = find_candidate(lex.term_strengths, keys)) return {ItemKind::Term, *s};
  return {};
}

bool has_exclaimed_run(std::string_view punct) noexcept {
  return punct.size() >= 2 && punct.find('!') != std::string_view::npos;
}

std::vector<Sentence> split_sentences(const StrengthLexicon& lex, std::string_view input) {
  std::vector<Sentence> sentences(1);
  for (const auto& tok : text::split_ws(input)) {
    auto& cur = sentences.back();
    if (const auto emo = lex.emoticons.find(tok); emo != lex.emoticons.end()) {
      cur.items.push_back({ItemKind::Term, emo->second});
      continue;
    }
    const auto core = text::strip_punct(tok);
    std::string_view trailing;
    std::string_view leading;
    if (core.empty()) {
      trailing = tok;
    } else {
      leading = std::string_view(tok).substr(0, static_cast<std::size_t>(core.data() - tok.data()));
      trailing = std::string_view(tok).substr(leading.size() + core.size());
      cur.items.push_back(classify_word(lex, text::to_lower(core)));
    }
    if (leading.find('!') != std::string_view::npos ||
        trailing.find('!') != std::string_view::npos) {
      cur.exclaimed = true;
    }
    if (has_exclaimed_run(trailing) && !cur.items.empty()) {
      cur.boosts.push_back(cur.items.size() - 1);
    }
    if (std::any_of(trailing.begin(), trailing.end(), is_terminator)) sentences.emplace_back();
  }
  return sentences;
}

SentimentScore score_sentence(Sentence& s) {
  const auto n = s.items.size();
  s.strengths.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& item = s.items[j];
    if (item.kind != ItemKind::Term) continue;
    const bool inverted = (j >= 1 && s.items[j - 1].kind == ItemKind::Inverter) ||
                          (j >= 2 && s.items[j - 2].kind == ItemKind::Inverter);
    int strength = item.value;
    if (inverted) {
      // An inverted term flips its base strength; boosters are ignored.
      strength = -strength;
    } else if (j >= 1 && s.items[j - 1].kind == ItemKind::Booster) {
      const int m = std::clamp(std::abs(strength) + s.items[j - 1].value, kMinStrength,
                               kMaxStrength);
      strength = sign_of(strength) * m;
    }
    s.strengths[j] = strength;
  }
  for (auto at : s.boosts) {
    // Nearest emotion term at or before the punctuation run.
    for (std::size_t j = at + 1; j-- > 0;) {
      if (s.strengths[j] != 0) {
        const int m = std::min(std::abs(s.strengths[j]) + 1, kMaxStrength);
        s.strengths[j] = sign_of(s.strengths[j]) * m;
        break;
      }
    }
  }
  SentimentScore score;
  for (int v : s.strengths) {
    if (v > 0) score.positive = std::max(score.positive, v);
    if (v < 0) score.negative = std::min(score.negative, v);
  }
  if (s.exclaimed) score.positive = std::max(score.positive, 2);
  return score;
}

void check_disjoint(const StrengthLexicon& lex, std::string_view key, std::string_view what) {
  if (what != "term" && lex.term_strengths.contains(std::string(key))) {
    throw std::invalid_argument(fmt::format("'{}' is both a {} and a sentiment term", key, what));
  }
  if (what != "booster" && lex.boosters.contains(std::string(key))) {
    throw std::invalid_argument(fmt::format("'{}' is both a {} and a booster", key, what));
  }
  if (what != "inverter" && lex.inverters.contains(std::string(key))) {
    throw std::invalid_argument(fmt::format("'{}' is both a {} and an inverter", key, what));
  }
}

}  // namespace

std::string_view label_name(Label l) noexcept {
  switch (l) {
    case Label::Positive:
      return "positive";
    case Label::Negative:
      return "negative";
    case Label::Neutral:
      return "neutral";
  }
  return "neutral";
}

std::optional<Label> parse_label(std::string_view s) noexcept {
  if (s == "positive" || s == "pos") return Label::Positive;
  if (s == "negative" || s == "neg") return Label::Negative;
  if (s == "neutral" || s == "neu") return Label::Neutral;
  return std::nullopt;
}

std::set<char> StrengthLexicon::default_allowed_doubles() {
  return {'e', 'o', 'l', 's', 't', 'f', 'p', 'r', 'm', 'n', 'c', 'd', 'g'};
}

void StrengthLexicon::validate() const {
  for (const auto& [term, strength] : term_strengths) {
    if (!in_band(strength)) {
      throw std::invalid_argument(fmt::format("strength {} of '{}' is outside 2..5", strength, term));
    }
    check_disjoint(*this, term, "term");
  }
  for (const auto& [term, delta] : boosters) check_disjoint(*this, term, "booster");
  for (const auto& term : inverters) check_disjoint(*this, term, "inverter");
}

StrengthLexicon parse_strength_list(std::istream& in, std::string_view source, Diagnostics& diag) {
  StrengthLexicon lex;
  for_each_pair(in, source, diag, [&](std::size_t line_no, const std::string& term, int strength) {
    if (!in_band(strength)) {
      diag.warn(fmt::format("{}:{}: strength {} of '{}' outside +-2..+-5, rejected", source,
                            line_no, strength, term));
      return;
    }
    if (lex.term_strengths.contains(term)) {
      diag.warn(fmt::format("{}:{}: duplicate term '{}', last value wins", source, line_no, term));
    }
    lex.term_strengths[term] = strength;
  });
  return lex;
}

void parse_boosters(StrengthLexicon& lex, std::istream& in, std::string_view source,
                    Diagnostics& diag) {
  for_each_pair(in, source, diag, [&](std::size_t line_no, const std::string& term, int delta) {
    if (delta == 0) {
      diag.warn(fmt::format("{}:{}: booster '{}' has zero delta, ignored", source, line_no, term));
    } else if (lex.term_strengths.contains(term) || lex.inverters.contains(term)) {
      diag.warn(fmt::format("{}:{}: booster '{}' collides with another list, ignored", source,
                            line_no, term));
    } else {
      lex.boosters[term] = delta;
    }
  });
}

void parse_inverters(StrengthLexicon& lex, std::istream& in, std::string_view source,
                     Diagnostics& diag) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto term = text::to_lower(body);
    if (lex.term_strengths.contains(term) || lex.boosters.contains(term)) {
      diag.warn(fmt::format("{}:{}: inverter '{}' collides with another list, ignored", source,
                            line_no, term));
      continue;
    }
    lex.inverters.insert(std::move(term));
  }
}

StrengthLexicon load_strength_lexicon(const std::filesystem::path& path, Diagnostics& diag) {
  auto in = open_or_throw(path);
  return parse_strength_list(in, path.string(), diag);
}

void load_boosters(StrengthLexicon& lex, const std::filesystem::path& path, Diagnostics& diag) {
  auto in = open_or_throw(path);
  parse_boosters(lex, in, path.string(), diag);
}

void load_inverters(StrengthLexicon& lex, const std::filesystem::path& path, Diagnostics& diag) {
  auto in = open_or_throw(path);
  parse_inverters(lex, in, path.string(), diag);
}

void load_emoticons(StrengthLexicon& lex, const std::filesystem::path& path, Diagnostics& diag) {
  auto in = open_or_throw(path);
  const auto source = path.string();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || (body.front() == '#' && body.find('\t') == std::string_view::npos)) {
      continue;
    }
    const auto tab = body.find('\t');
    const auto value = tab == std::string_view::npos ? std::nullopt : parse_int(body.substr(tab + 1));
    if (!value || !in_band(*value)) {
      diag.warn(fmt::format("{}:{}: malformed emoticon entry", source, line_no));
      continue;
    }
    lex.emoticons[std::string(trim(body.substr(0, tab)))] = *value;
  }
}

void write_strength_list(std::ostream& out, const StrengthLexicon& lex) {
  for (const auto& [term, strength] : lex.term_strengths) out << term << '\t' << strength << '\n';
}

StrengthLexicon seed_lexicon() {
  Diagnostics diag;
  std::istringstream terms{std::string(seed_strength_text())};
  auto lex = parse_strength_list(terms, "seed", diag);
  std::istringstream boosters{std::string(seed_booster_text())};
  parse_boosters(lex, boosters, "seed", diag);
  std::istringstream inverters{std::string(seed_inverter_text())};
  parse_inverters(lex, inverters, "seed", diag);
  return lex;
}

std::string correct_spelling(std::string_view token, const std::set<char>& allowed_doubles) {
  std::string out;
  out.reserve(token.size());
  std::size_t i = 0;
  while (i < token.size()) {
    const char c = token[i];
    std::size_t j = i;
    while (j < token.size() && token[j] == c) ++j;
    std::size_t run = j - i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const bool elongated = run > 2;
      run = std::min<std::size_t>(run, 2);
      if (run == 2 && (!allowed_doubles.contains(c) || (elongated && j == token.size()))) run = 1;
    }
    out.append(run, c);
    i = j;
  }
  return out;
}

std::vector<std::string> spelling_candidates(std::string_view token,
                                             const std::set<char>& allowed_doubles) {
  std::vector<std::string> out{std::string(token)};
  auto corrected = correct_spelling(token, allowed_doubles);
  if (corrected != out.front()) out.push_back(corrected);
  // "seeee" corrects to "se"; also offer "see".
  if (token.size() >= 3 && !corrected.empty()) {
    const char last = token.back();
    if (token[token.size() - 2] == last && token[token.size() - 3] == last &&
        std::isalpha(static_cast<unsigned char>(last)) && allowed_doubles.contains(last)) {
      auto kept = corrected + last;
      if (std::find(out.begin(), out.end(), kept) == out.end()) out.push_back(std::move(kept));
    }
  }
  return out;
}

SentimentScore score_text(const StrengthLexicon& lex, std::string_view input) {
  SentimentScore total;
  for (auto& sentence : split_sentences(lex, input)) {
    const auto s = score_sentence(sentence);
    total.positive = std::max(total.positive, s.positive);
    total.negative = std::min(total.negative, s.negative);
  }
  return total;
}

Label classify_trinary(SentimentScore score) noexcept {
  const int neg = -score.negative;
  if (score.positive > neg) return Label::Positive;
  if (neg > score.positive) return Label::Negative;
  return Label::Neutral;
}

std::size_t count_correct(const StrengthLexicon& lex, std::span<const LabeledText> corpus) {
  std::size_t correct = 0;
  for (const auto& t : corpus) {
    if (classify_trinary(score_text(lex, t.text)) == t.label) ++correct;
  }
  return correct;
}

OptimizeResult optimize_strengths(StrengthLexicon lex, std::span<const LabeledText> corpus,
                                  long min_gain, std::size_t max_passes) {
  if (corpus.empty()) throw std::invalid_argument("optimize_strengths: empty corpus");

  // Which texts mention which terms; only those can change when a term moves.
  std::map<std::string, std::vector<std::size_t>> mentions;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::set<std::string> seen;
    for (const auto& tok : text::split_ws(corpus[i].text)) {
      const auto core = text::to_lower(text::strip_punct(tok));
      if (core.empty()) continue;
      for (const auto& key : spelling_candidates(core, lex.allowed_doubles)) {
        if (lex.term_strengths.contains(key)) seen.insert(key);
      }
    }
    for (const auto& term : seen) mentions[term].push_back(i);
  }

  std::vector<bool> correct(corpus.size());
  OptimizeResult result;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    correct[i] = classify_trinary(score_text(lex, corpus[i].text)) == corpus[i].label;
    if (correct[i]) ++result.correct_before;
  }

  auto gain_of = [&](const std::vector<std::size_t>& texts) {
    long gain = 0;
    for (auto i : texts) {
      const bool now = classify_trinary(score_text(lex, corpus[i].text)) == corpus[i].label;
      gain += static_cast<long>(now) - static_cast<long>(correct[i]);
    }
    return gain;
  };

  std::size_t current = result.correct_before;
  while (result.passes < max_passes) {
    ++result.passes;
    bool changed = false;
    for (auto& [term, strength] : lex.term_strengths) {
      const auto it = mentions.find(term);
      if (it == mentions.end()) continue;
      const int original = strength;
      int best = original;
      long best_gain = min_gain - 1;
      for (int step : {+1, -1}) {
        const int magnitude = std::abs(original) + step;
        if (magnitude < kMinStrength || magnitude > kMaxStrength) continue;
        strength = sign_of(original) * magnitude;
        const long g = gain_of(it->second);
        if (g > best_gain) {
          best_gain = g;
          best = strength;
        }
      }
      strength = best;
      if (best == original) continue;
      for (auto i : it->second) {
        correct[i] = classify_trinary(score_text(lex, corpus[i].text)) == corpus[i].label;
      }
      current = static_cast<std::size_t>(static_cast<long>(current) + best_gain);
      result.log.push_back({term, original, best, best_gain, result.passes});
      changed = true;
    }
    if (!changed) {
      result.converged = true;
      break;
    }
  }
  result.correct_after = current;
  result.lexicon = std::move(lex);
  return result;
}

}  // namespace altsent::senti

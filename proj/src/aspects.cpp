#include "altsent/aspects.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

#include "altsent/summarize.hpp"
#include "altsent/text.hpp"

namespace altsent::aspects {

std::string_view aspect_name(Aspect a) noexcept {
  switch (a) {
    case Aspect::Title:
      return "title";
    case Aspect::Abstract:
      return "abstract";
    case Aspect::Methodology:
      return "methodology";
    case Aspect::ResultsConclusion:
      return "results_conclusion";
    case Aspect::Other:
      return "other";
  }
  return "other";
}

std::optional<Aspect> parse_aspect(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kAspectCount; ++i) {
    const auto a = static_cast<Aspect>(i);
    if (aspect_name(a) == s) return a;
  }
  if (s == "results" || s == "conclusion") return Aspect::ResultsConclusion;
  return std::nullopt;
}

std::string_view mode_name(Mode m) noexcept {
  return m == Mode::Exclusive ? "exclusive" : "double_count";
}

std::optional<Mode> parse_mode(std::string_view s) noexcept {
  if (s == "exclusive") return Mode::Exclusive;
  if (s == "double_count" || s == "double-count") return Mode::DoubleCount;
  return std::nullopt;
}

KeywordTable KeywordTable::defaults() {
  KeywordTable t;
  for (auto kw : {"title", "subject", "topic"}) t.add(Aspect::Title, kw);
  for (auto kw : {"abstract", "overview", "summary"}) t.add(Aspect::Abstract, kw);
  for (auto kw : {"method", "material", "calculation", "procedure", "tool", "approach", "model",
                  "technique", "experiment"}) {
    t.add(Aspect::Methodology, kw);
  }
  for (auto kw : {"result", "evaluation", "conclusion", "value", "discussing", "showing",
                  "finding"}) {
    t.add(Aspect::ResultsConclusion, kw);
  }
  return t;
}

KeywordTable KeywordTable::load(const std::filesystem::path& path, Diagnostics& diag) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open aspect keyword file {}", path.string()));
  KeywordTable t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    const auto aspect = tab == std::string::npos ? std::nullopt : parse_aspect(line.substr(0, tab));
    if (!aspect || *aspect == Aspect::Other) {
      diag.warn(fmt::format("{}:{}: expected '<aspect><TAB>kw,kw,...' with aspect one of title, "
                            "abstract, methodology, results_conclusion",
                            path.string(), line_no));
      continue;
    }
    std::string_view rest(line);
    rest.remove_prefix(tab + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto end = rest.find(',', start);
      if (end == std::string_view::npos) end = rest.size();
      const auto kw = text::split_ws(rest.substr(start, end - start));
      if (kw.size() == 1) t.add(*aspect, kw.front());
      start = end + 1;
    }
  }
  if (t.empty()) throw InputError(fmt::format("{}: no aspect keywords", path.string()));
  return t;
}

void KeywordTable::add(Aspect a, std::string keyword) {
  if (a == Aspect::Other) throw std::invalid_argument("keywords cannot be added to 'other'");
  auto& list = keywords_[static_cast<std::size_t>(a)];
  auto kw = text::to_lower(keyword);
  if (kw.empty() || std::find(list.begin(), list.end(), kw) != list.end()) return;
  list.push_back(std::move(kw));
}

const std::vector<std::string>& KeywordTable::keywords(Aspect a) const {
  static const std::vector<std::string> none;
  if (a == Aspect::Other) return none;
  return keywords_[static_cast<std::size_t>(a)];
}

bool KeywordTable::empty() const noexcept {
  return std::all_of(keywords_.begin(), keywords_.end(), [](const auto& l) { return l.empty(); });
}

std::vector<Aspect> KeywordTable::match_token(std::string_view token) const {
  std::vector<Aspect> out;
  for (std::size_t i = 0; i < keywords_.size(); ++i) {
    for (const auto& kw : keywords_[i]) {
      if (token.starts_with(kw)) {
        out.push_back(static_cast<Aspect>(i));
        break;
      }
    }
  }
  return out;
}

std::vector<Aspect> tweet_aspects(std::string_view input, const KeywordTable& keywords, Mode mode) {
  std::array<bool, kAspectCount> hit{};
  bool any = false;
  for (const auto& tok : text::split_ws(input)) {
    const auto core = text::to_lower(text::strip_punct(tok));
    if (core.empty()) continue;
    const auto matched = keywords.match_token(core);
    if (matched.empty()) continue;
    if (mode == Mode::Exclusive) return {matched.front()};
    for (auto a : matched) hit[static_cast<std::size_t>(a)] = true;
    any = true;
  }
  if (!any) return {Aspect::Other};
  std::vector<Aspect> out;
  for (std::size_t i = 0; i < kAspectCount; ++i) {
    if (hit[i]) out.push_back(static_cast<Aspect>(i));
  }
  return out;
}

std::vector<AspectOpinion> extract_opinions(const ArticleDoc& doc, const KeywordTable& keywords,
                                            Mode mode) {
  std::vector<AspectOpinion> out;
  for (const auto& tw : doc.tweets) {
    for (auto a : tweet_aspects(tw.text, keywords, mode)) {
      out.push_back({doc.altmetric_id, a, tw.tweet_id, tw.posted_at});
    }
  }
  return out;
}

AspectProfile match_aspects(const ArticleDoc& doc, const KeywordTable& keywords, Mode mode) {
  if (keywords.empty()) throw std::invalid_argument("match_aspects: empty keyword table");
  AspectProfile p;
  p.altmetric_id = doc.altmetric_id;
  p.tweet_count = doc.tweets.size();
  p.domains = doc.domain_codes;
  for (const auto& tw : doc.tweets) {
    for (auto a : tweet_aspects(tw.text, keywords, mode)) ++p.counts[static_cast<std::size_t>(a)];
  }
  return p;
}

std::vector<AspectRow> domain_aspect_table(std::span<const AspectProfile> profiles, Mode mode) {
  struct Totals {
    std::size_t docs = 0;
    std::size_t tweets = 0;
    std::array<std::size_t, kAspectCount> counts{};
  };
  std::map<Discipline, Totals> totals;
  for (const auto& p : profiles) {
    for (auto d : p.domains) {
      auto& t = totals[d];
      ++t.docs;
      t.tweets += p.tweet_count;
      for (std::size_t i = 0; i < kAspectCount; ++i) t.counts[i] += p.counts[i];
    }
  }

  std::vector<AspectRow> rows;
  for (const auto& [domain, t] : totals) {
    AspectRow row;
    row.domain = domain;
    row.doc_count = t.docs;
    if (t.tweets > 0) {
      if (mode == Mode::Exclusive) {
        const auto shares = summarize::percent_shares(t.counts);
        std::copy(shares.begin(), shares.end(), row.pct.begin());
      } else {
        for (std::size_t i = 0; i < kAspectCount; ++i) {
          row.pct[i] = 100.0 * static_cast<double>(t.counts[i]) / static_cast<double>(t.tweets);
        }
      }
    }
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.doc_count != b.doc_count) return a.doc_count > b.doc_count;
    return a.domain < b.domain;
  });
  return rows;
}

}  // namespace altsent::aspects

#include "altsent/summarize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace altsent::summarize {

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double normalized_score(senti::SentimentScore s) noexcept {
  return static_cast<double>(s.positive + s.negative + 4) / 8.0;
}

senti::Label label_for(double score, Thresholds t) noexcept {
  if (score > t.positive) return senti::Label::Positive;
  if (score < t.negative) return senti::Label::Negative;
  return senti::Label::Neutral;
}

ScoredArticle summarize_article(const ArticleDoc& doc, std::span<const senti::SentimentScore> scores,
                                Thresholds t) {
  ScoredArticle out;
  out.sentiment.altmetric_id = doc.altmetric_id;
  out.sentiment.tweet_count = scores.size();
  out.domains = doc.domain_codes;
  out.citation_count = doc.citation_count;
  if (scores.empty()) return out;

  double sum_t = 0, sum_pos = 0, sum_neg = 0;
  for (const auto& s : scores) {
    sum_t += normalized_score(s);
    sum_pos += s.positive / 5.0;
    sum_neg += -s.negative / 5.0;
  }
  const auto n = static_cast<double>(scores.size());
  out.sentiment.score = sum_t / n;
  out.sentiment.label = label_for(out.sentiment.score, t);
  out.avg_pos = sum_pos / n;
  out.avg_neg = sum_neg / n;
  return out;
}

ScoredArticle article_score(const ArticleDoc& doc, const senti::StrengthLexicon& lex,
                            std::size_t min_tweets, Thresholds t) {
  if (doc.tweets.size() < min_tweets) {
    throw std::invalid_argument("article " + doc.altmetric_id + " has fewer than " +
                                std::to_string(min_tweets) + " tweets");
  }
  std::vector<senti::SentimentScore> scores;
  scores.reserve(doc.tweets.size());
  for (const auto& tw : doc.tweets) scores.push_back(senti::score_text(lex, tw.text));
  return summarize_article(doc, scores, t);
}

NormalFit fit_normal(std::span<const double> values) {
  NormalFit fit;
  if (values.empty()) return fit;
  const auto n = static_cast<double>(values.size());
  fit.mu = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() < 2) return fit;
  double ss = 0;
  for (double v : values) ss += (v - fit.mu) * (v - fit.mu);
  fit.sigma = std::sqrt(ss / (n - 1.0));
  return fit;
}

namespace {

// Articles grouped per domain, each group in altmetric_id order.
std::map<Discipline, std::vector<const ScoredArticle*>> by_domain(
    std::span<const ScoredArticle> articles) {
  std::vector<const ScoredArticle*> ordered;
  ordered.reserve(articles.size());
  for (const auto& a : articles) ordered.push_back(&a);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return a->sentiment.altmetric_id < b->sentiment.altmetric_id;
  });
  std::map<Discipline, std::vector<const ScoredArticle*>> groups;
  for (const auto* a : ordered) {
    for (auto d : a->domains) groups[d].push_back(a);
  }
  return groups;
}

}  // namespace

std::vector<DomainSummary> domain_summary(std::span<const ScoredArticle> articles) {
  std::vector<DomainSummary> rows;
  for (const auto& [domain, members] : by_domain(articles)) {
    DomainSummary row;
    row.domain = domain;
    row.doc_count = members.size();
    std::vector<double> scores;
    scores.reserve(members.size());
    for (const auto* a : members) {
      row.avg_pos += a->avg_pos;
      row.avg_neg += a->avg_neg;
      scores.push_back(a->sentiment.score);
    }
    row.avg_pos /= static_cast<double>(members.size());
    row.avg_neg /= static_cast<double>(members.size());
    row.normal_fit = fit_normal(scores);
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.avg_pos != b.avg_pos) return a.avg_pos > b.avg_pos;
    return a.domain < b.domain;
  });
  return rows;
}

std::vector<HistogramBin> score_histogram(std::span<const ScoredArticle> articles, std::size_t bins) {
  std::vector<HistogramBin> out;
  if (bins == 0) return out;
  for (const auto& [domain, members] : by_domain(articles)) {
    std::vector<std::size_t> counts(bins, 0);
    for (const auto* a : members) {
      auto idx = static_cast<std::size_t>(a->sentiment.score * static_cast<double>(bins));
      counts[std::min(idx, bins - 1)]++;
    }
    for (std::size_t b = 0; b < bins; ++b) {
      out.push_back({domain, static_cast<double>(b) / static_cast<double>(bins),
                     static_cast<double>(b + 1) / static_cast<double>(bins), counts[b]});
    }
  }
  return out;
}

std::vector<double> percent_shares(std::span<const std::size_t> counts) {
  const auto total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (total == 0) throw std::invalid_argument("percent_shares: all counts are zero");

  // Work in hundredths of a percent: 10000 units to hand out.
  constexpr std::uint64_t kUnits = 10000;
  std::vector<std::uint64_t> units(counts.size());
  std::vector<std::uint64_t> remainders(counts.size());
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto scaled = static_cast<std::uint64_t>(counts[i]) * kUnits;
    units[i] = scaled / total;
    remainders[i] = scaled % total;
    assigned += units[i];
  }
  std::vector<std::size_t> order(counts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return remainders[a] > remainders[b]; });
  for (std::size_t k = 0; assigned < kUnits; ++k, ++assigned) ++units[order[k % order.size()]];

  std::vector<double> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = static_cast<double>(units[i]) / 100.0;
  return out;
}

Distribution sentiment_distribution(std::span<const senti::Label> labels) {
  if (labels.empty()) throw std::invalid_argument("sentiment_distribution: no labels");
  std::array<std::size_t, 3> counts{};
  for (auto l : labels) {
    switch (l) {
      case senti::Label::Positive:
        ++counts[0];
        break;
      case senti::Label::Negative:
        ++counts[1];
        break;
      case senti::Label::Neutral:
        ++counts[2];
        break;
    }
  }
  const auto pct = percent_shares(counts);
  return {pct[0], pct[1], pct[2], labels.size()};
}

std::map<int, Distribution> distribution_by_year(std::span<const senti::Label> labels,
                                                 std::span<const std::optional<std::string>> posted_at) {
  if (labels.size() != posted_at.size()) {
    throw std::invalid_argument("distribution_by_year: size mismatch");
  }
  std::map<int, std::vector<senti::Label>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& ts = posted_at[i];
    if (!ts || ts->size() < 4) continue;
    if (!std::all_of(ts->begin(), ts->begin() + 4, [](char c) { return c >= '0' && c <= '9'; })) {
      continue;
    }
    groups[std::stoi(ts->substr(0, 4))].push_back(labels[i]);
  }
  std::map<int, Distribution> out;
  for (const auto& [year, ls] : groups) out.emplace(year, sentiment_distribution(ls));
  return out;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) return std::nullopt;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

std::vector<BinCorrelation> citation_correlation(std::span<const ArticleSentiment> articles,
                                                 const std::map<std::string, std::uint64_t>& citations,
                                                 std::span<const double> thresholds,
                                                 CorrelationMethod method) {
  std::vector<const ArticleSentiment*> ordered;
  for (const auto& a : articles) ordered.push_back(&a);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* a, const auto* b) { return a->altmetric_id < b->altmetric_id; });

  std::vector<BinCorrelation> out;
  for (double threshold : thresholds) {
    std::vector<double> xs, ys;
    for (const auto* a : ordered) {
      if (a->score <= threshold) continue;
      const auto it = citations.find(a->altmetric_id);
      if (it == citations.end()) continue;
      xs.push_back(a->score);
      ys.push_back(static_cast<double>(it->second));
    }
    BinCorrelation row{threshold, xs.size(), std::nullopt};
    if (xs.size() >= 3) {
      row.coefficient = method == CorrelationMethod::Spearman ? spearman(xs, ys) : pearson(xs, ys);
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace altsent::summarize

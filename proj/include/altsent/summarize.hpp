#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "altsent/corpus.hpp"
#include "altsent/senti.hpp"

namespace altsent::summarize {

/// Article labels: score > positive is positive, score < negative is
/// negative, anything in between (boundaries included) is neutral.
struct Thresholds {
  double positive = 0.7;
  double negative = 0.3;
};

/// Maps a dual score onto [0,1]: (positive + negative + 4) / 8.
double normalized_score(senti::SentimentScore s) noexcept;

senti::Label label_for(double score, Thresholds t = {}) noexcept;

struct ArticleSentiment {
  std::string altmetric_id;
  double score = 0;
  senti::Label label = senti::Label::Neutral;
  std::size_t tweet_count = 0;
};

/// An article's sentiment plus the per-article inputs of the domain tables.
struct ScoredArticle {
  ArticleSentiment sentiment;
  double avg_pos = 0;  // mean positive / 5
  double avg_neg = 0;  // mean |negative| / 5
  DomainSet domains;
  std::uint64_t citation_count = 0;
};

/// Aggregates already computed tweet scores of `doc` (same order as its tweets).
ScoredArticle summarize_article(const ArticleDoc& doc, std::span<const senti::SentimentScore> scores,
                                Thresholds t = {});

/// Scores every tweet of `doc` and aggregates. Throws std::invalid_argument
/// when the article has fewer than `min_tweets` tweets.
ScoredArticle article_score(const ArticleDoc& doc, const senti::StrengthLexicon& lex,
                            std::size_t min_tweets = 30, Thresholds t = {});

struct NormalFit {
  double mu = 0;
  double sigma = 0;
};

/// Sample mean and (n-1) standard deviation; sigma is 0 for fewer than two values.
NormalFit fit_normal(std::span<const double> values);

struct DomainSummary {
  Discipline domain{};
  std::size_t doc_count = 0;
  double avg_pos = 0;
  double avg_neg = 0;
  NormalFit normal_fit;
};

/// One row per domain with at least one article, ordered by avg_pos
/// descending then by domain. Independent of input order.
std::vector<DomainSummary> domain_summary(std::span<const ScoredArticle> articles);

struct HistogramBin {
  Discipline domain{};
  double lower = 0;
  double upper = 0;
  std::size_t count = 0;
};

/// Article-score histogram per domain over `bins` equal-width bins of [0,1].
std::vector<HistogramBin> score_histogram(std::span<const ScoredArticle> articles,
                                          std::size_t bins = 10);

/// Percentages rounded to hundredths by largest remainder, so they sum to
/// exactly 100. Throws std::invalid_argument when every count is zero.
std::vector<double> percent_shares(std::span<const std::size_t> counts);

struct Distribution {
  double pct_pos = 0;
  double pct_neg = 0;
  double pct_neu = 0;
  std::size_t total = 0;
};

/// Throws std::invalid_argument on an empty list.
Distribution sentiment_distribution(std::span<const senti::Label> labels);

/// Per calendar year, taken from the leading four digits of the timestamp.
/// Entries without a usable timestamp are left out.
std::map<int, Distribution> distribution_by_year(std::span<const senti::Label> labels,
                                                 std::span<const std::optional<std::string>> posted_at);

enum class CorrelationMethod { Spearman, Pearson };

std::optional<double> pearson(std::span<const double> x, std::span<const double> y);
/// Pearson correlation of average ranks.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

struct BinCorrelation {
  double threshold = 0;
  std::size_t n = 0;
  std::optional<double> coefficient;  // empty when n < 3 or a side is constant
};

/// For each threshold, correlates article score with citation count over
/// articles scoring strictly above it. Articles without a citation count
/// are skipped.
std::vector<BinCorrelation> citation_correlation(std::span<const ArticleSentiment> articles,
                                                 const std::map<std::string, std::uint64_t>& citations,
                                                 std::span<const double> thresholds,
                                                 CorrelationMethod method = CorrelationMethod::Spearman);

}  // namespace altsent::summarize

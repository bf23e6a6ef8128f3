#include <gtest/gtest.h>

#include <cmath>

#include "altsent/summarize.hpp"

using namespace altsent;
using namespace altsent::summarize;
using senti::Label;

namespace {

ScoredArticle article(std::string id, double score, double pos, double neg, DomainSet domains,
                      std::uint64_t citations = 0) {
  ScoredArticle a;
  a.sentiment.altmetric_id = std::move(id);
  a.sentiment.score = score;
  a.sentiment.label = label_for(score);
  a.avg_pos = pos;
  a.avg_neg = neg;
  a.domains = std::move(domains);
  a.citation_count = citations;
  return a;
}

ArticleDoc doc_with(std::vector<std::string> texts) {
  ArticleDoc d;
  d.altmetric_id = "A";
  d.domain_codes = {Discipline::Medicine};
  for (auto& t : texts) d.tweets.push_back({"A", "t", std::move(t), std::nullopt, std::nullopt, std::nullopt});
  d.tweet_count = d.tweets.size();
  return d;
}

}  // namespace

TEST(NormalizedScore, Extremes) {
  EXPECT_DOUBLE_EQ(normalized_score({1, -1}), 0.5);
  EXPECT_DOUBLE_EQ(normalized_score({5, -1}), 1.0);
  EXPECT_DOUBLE_EQ(normalized_score({1, -5}), 0.0);
  EXPECT_DOUBLE_EQ(normalized_score({4, -2}), 0.75);
}

TEST(LabelFor, StrictThresholds) {
  EXPECT_EQ(label_for(0.7), Label::Neutral);
  EXPECT_EQ(label_for(0.7000001), Label::Positive);
  EXPECT_EQ(label_for(0.3), Label::Neutral);
  EXPECT_EQ(label_for(0.2999999), Label::Negative);
  EXPECT_EQ(label_for(0.5, {0.6, 0.55}), Label::Negative);
}

TEST(SummarizeArticle, MeansOverTweets) {
  const auto d = doc_with({"a", "b"});
  const std::vector<senti::SentimentScore> s{{5, -1}, {3, -3}};
  const auto a = summarize_article(d, s);
  EXPECT_DOUBLE_EQ(a.sentiment.score, (1.0 + 0.5) / 2);
  EXPECT_EQ(a.sentiment.label, Label::Positive);
  EXPECT_DOUBLE_EQ(a.avg_pos, (1.0 + 0.6) / 2);
  EXPECT_DOUBLE_EQ(a.avg_neg, (0.2 + 0.6) / 2);
  EXPECT_EQ(a.sentiment.tweet_count, 2u);
}

TEST(ArticleScore, EnforcesMinimum) {
  senti::StrengthLexicon lex;
  lex.term_strengths = {{"great", 3}};
  const auto d = doc_with({"great", "great paper", "ok"});
  EXPECT_THROW(article_score(d, lex, 4), std::invalid_argument);
  const auto a = article_score(d, lex, 3);
  EXPECT_DOUBLE_EQ(a.sentiment.score, (0.75 + 0.75 + 0.5) / 3);
}

TEST(FitNormal, SampleStandardDeviation) {
  const std::vector<double> v{0.2, 0.4, 0.6};
  const auto f = fit_normal(v);
  EXPECT_DOUBLE_EQ(f.mu, 0.4);
  EXPECT_NEAR(f.sigma, 0.2, 1e-12);
  const std::vector<double> one{0.3};
  EXPECT_DOUBLE_EQ(fit_normal(one).sigma, 0.0);
}

TEST(DomainSummary, MultiDomainArticlesCountInEach) {
  const std::vector<ScoredArticle> arts{
      article("b", 0.6, 0.4, 0.2, {Discipline::Medicine, Discipline::Chemistry}),
      article("a", 0.8, 0.6, 0.2, {Discipline::Medicine}),
      article("c", 0.4, 0.2, 0.4, {Discipline::Chemistry})};
  const auto rows = domain_summary(arts);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].domain, Discipline::Medicine);
  EXPECT_EQ(rows[0].doc_count, 2u);
  EXPECT_DOUBLE_EQ(rows[0].avg_pos, 0.5);
  EXPECT_DOUBLE_EQ(rows[0].normal_fit.mu, 0.7);
  EXPECT_EQ(rows[1].domain, Discipline::Chemistry);
  EXPECT_DOUBLE_EQ(rows[1].avg_neg, 0.3);
}

TEST(Histogram, BinsCoverUnitInterval) {
  const std::vector<ScoredArticle> arts{article("a", 0.0, 0, 0, {Discipline::Mathematics}),
                                        article("b", 1.0, 0, 0, {Discipline::Mathematics}),
                                        article("c", 0.55, 0, 0, {Discipline::Mathematics})};
  const auto bins = score_histogram(arts, 4);
  ASSERT_EQ(bins.size(), 4u);
  EXPECT_EQ(bins[0].count, 1u);
  EXPECT_EQ(bins[2].count, 1u);
  EXPECT_EQ(bins[3].count, 1u);
  EXPECT_DOUBLE_EQ(bins[3].lower, 0.75);
  EXPECT_DOUBLE_EQ(bins[3].upper, 1.0);
}

TEST(PercentShares, LargestRemainderSumsToHundred) {
  const std::vector<std::size_t> thirds{1, 1, 1};
  const auto p = percent_shares(thirds);
  EXPECT_DOUBLE_EQ(p[0] + p[1] + p[2], 100.0);
  EXPECT_DOUBLE_EQ(p[0], 33.34);
  EXPECT_DOUBLE_EQ(p[1], 33.33);
  const std::vector<std::size_t> zeros{0, 0};
  EXPECT_THROW(percent_shares(zeros), std::invalid_argument);
}

TEST(Distribution, CountsAndYears) {
  const std::vector<Label> ls{Label::Positive, Label::Negative, Label::Neutral, Label::Neutral};
  const auto d = sentiment_distribution(ls);
  EXPECT_DOUBLE_EQ(d.pct_pos, 25.0);
  EXPECT_DOUBLE_EQ(d.pct_neu, 50.0);
  EXPECT_EQ(d.total, 4u);
  const std::vector<std::optional<std::string>> ts{"2013-01-01", "2013-05-05", std::nullopt, "x"};
  const auto years = distribution_by_year(ls, ts);
  ASSERT_EQ(years.size(), 1u);
  EXPECT_EQ(years.at(2013).total, 2u);
  EXPECT_DOUBLE_EQ(years.at(2013).pct_pos, 50.0);
  EXPECT_THROW(sentiment_distribution({}), std::invalid_argument);
}

TEST(Correlation, PearsonAndSpearman) {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{1, 4, 9, 16};
  EXPECT_NEAR(*spearman(x, y), 1.0, 1e-12);
  EXPECT_LT(*pearson(x, y), 1.0);
  const std::vector<double> c{5, 5, 5, 5};
  EXPECT_FALSE(pearson(x, c));
  EXPECT_FALSE(spearman(x, c));
  const std::vector<double> ties{1, 2, 2, 3};
  EXPECT_NEAR(*spearman(ties, x), *pearson(std::vector<double>{1, 2.5, 2.5, 4}, x), 1e-12);
}

TEST(Correlation, BinsUseStrictThresholdAndSkipMissingCounts) {
  const std::vector<ArticleSentiment> arts{{"a", 0.90, Label::Positive, 30},
                                           {"b", 0.86, Label::Positive, 30},
                                           {"c", 0.95, Label::Positive, 30},
                                           {"d", 0.85, Label::Positive, 30},
                                           {"e", 0.99, Label::Positive, 30}};
  const std::map<std::string, std::uint64_t> cites{{"a", 20}, {"b", 10}, {"c", 30}, {"d", 5}};
  const std::vector<double> bins{0.85, 0.8};
  const auto rows = citation_correlation(arts, cites, bins);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].n, 3u);
  EXPECT_NEAR(*rows[0].coefficient, 1.0, 1e-12);
  EXPECT_EQ(rows[1].n, 4u);
  const std::vector<double> high{0.9};
  EXPECT_FALSE(citation_correlation(arts, cites, high)[0].coefficient);
}

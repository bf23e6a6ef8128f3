#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <span>

#include "altsent/aspects.hpp"
#include "altsent/corpus.hpp"
#include "altsent/summarize.hpp"

namespace altsent::report {

/// Tallies of the cleaning stage.
struct DropStats {
  std::size_t records = 0;
  std::size_t malformed = 0;
  std::size_t non_english = 0;
  std::size_t duplicate = 0;
  std::size_t empty = 0;
  std::size_t kept = 0;
};

/// JSON Lines, kept tweets only, keys in sorted order.
void write_clean_tweets(std::ostream& out, std::span<const CleanTweet> tweets);
void write_drop_stats(std::ostream& out, const DropStats& stats);

void write_article_sentiment(std::ostream& out, std::span<const summarize::ScoredArticle> articles);
void write_domain_summary(std::ostream& out, std::span<const summarize::DomainSummary> rows);
void write_normal_fits(std::ostream& out, std::span<const summarize::DomainSummary> rows);
void write_histogram(std::ostream& out, std::span<const summarize::HistogramBin> bins);
/// Overall row (year "all") followed by one row per year.
void write_distribution(std::ostream& out, const summarize::Distribution* overall,
                        const std::map<int, summarize::Distribution>& by_year);
void write_correlation(std::ostream& out, std::span<const summarize::BinCorrelation> rows,
                       summarize::CorrelationMethod method);
void write_aspects(std::ostream& out, std::span<const aspects::AspectRow> rows, aspects::Mode mode);

}  // namespace altsent::report

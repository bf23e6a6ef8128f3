#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altsent/diagnostics.hpp"
#include "altsent/senti.hpp"

namespace altsent::lexgen {

/// Per-class occurrence counts for one token.
struct TermCounts {
  std::string token;
  std::uint64_t pos_freq = 0;
  std::uint64_t neg_freq = 0;
  std::uint64_t neu_freq = 0;
  std::uint64_t total_freq = 0;
};

/// Splits cleaned text into counting tokens: whitespace split, surrounding
/// punctuation stripped, tokens that are all punctuation skipped.
std::vector<std::string> count_tokens(std::string_view text);

/// Token occurrences (not documents) per label, sorted by token.
/// Throws std::invalid_argument on an empty corpus.
std::vector<TermCounts> count_terms(std::span<const senti::LabeledText> corpus);

struct Rates {
  double pr = 0;
  double nr = 0;
};

/// Share of a token's occurrences that fall in positive / negative texts.
Rates compute_rates(const TermCounts& c);

struct Frequencies {
  double pf = 0;
  double nf = 0;
};

/// Token frequency relative to all tokens of its class. An empty class
/// (sum 0) yields 0.
Frequencies compute_frequencies(const TermCounts& c, std::uint64_t sum_pos, std::uint64_t sum_neg);

/// F(x) = #(values <= x) / #values over a fixed sample.
class EmpiricalCdf {
 public:
  /// Throws std::invalid_argument when `values` is empty.
  explicit EmpiricalCdf(std::vector<double> values);

  double operator()(double x) const noexcept;
  std::size_t size() const noexcept { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

/// 2ab/(a+b), with HM(0,0) = 0.
double harmonic_mean(double a, double b) noexcept;

struct HarmonicScores {
  double hmp = 0;
  double hmn = 0;
};

HarmonicScores harmonic_scores(double pr_cdf, double pf_cdf, double nr_cdf,
                               double nf_cdf) noexcept;

struct LexiconEntry {
  static constexpr int n_metrics = 2;

  TermCounts counts;
  double pr = 0, nr = 0;
  double pf = 0, nf = 0;
  double pr_cdf = 0, pf_cdf = 0, nr_cdf = 0, nf_cdf = 0;
  double hmp = 0, hmn = 0;
};

struct CorpusSizes {
  std::uint64_t sum_pos = 0;  // PF denominator
  std::uint64_t sum_neg = 0;  // NF denominator
  std::uint64_t sum_neu = 0;
  std::size_t texts = 0;
};

enum class View { Positive, Negative };

struct LexiconTable {
  std::vector<LexiconEntry> entries;
  CorpusSizes sizes;
  View view = View::Positive;

  /// Copy ordered by HMP (or HMN) descending, then total_freq descending,
  /// then token ascending.
  LexiconTable sorted(View v) const;
};

struct Options {
  std::uint64_t min_total_freq = 1;
};

/// Counts, rates, frequencies, four empirical CDFs and harmonic-mean scores
/// for every token; returned in the positive view. Warns when a class has
/// no tokens (its frequency metric is then 0 everywhere).
LexiconTable generate_lexicon(std::span<const senti::LabeledText> corpus, const Options& options,
                              Diagnostics& diag);

struct StrengthBand {
  int min_strength = 2;
  int max_strength = 5;
};

/// Turns the top-k tokens of each view into term strengths by binning their
/// within-set quantile linearly across the band. A token in both lists goes
/// to the larger of HMP/HMN; exact ties are dropped with a warning.
senti::StrengthLexicon export_strength_list(const LexiconTable& table, std::size_t top_k,
                                            StrengthBand band, Diagnostics& diag);

/// Full table: token, pos_freq, neg_freq, total_freq, PR, NR, PF, NF,
/// PR_cdf, PF_cdf, NR_cdf, NF_cdf, HMP, HMN.
void write_table(std::ostream& out, const LexiconTable& table);

/// Top-k listing in the given view: rank, token, total count, HMP, HMN.
void write_top_listing(std::ostream& out, const LexiconTable& table, View view, std::size_t top_k);

}  // namespace altsent::lexgen

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altsent/aspects.hpp"
#include "altsent/diagnostics.hpp"
#include "altsent/report.hpp"
#include "altsent/senti.hpp"
#include "altsent/summarize.hpp"

namespace altsent::pipeline {

/// Every knob of the command-line pipeline. Keys of `set` match the
/// config-file keys and, with '_' replaced by '-', the long CLI flags.
struct PipelineConfig {
  std::filesystem::path tweets;
  std::filesystem::path articles;
  std::filesystem::path out = ".";
  std::filesystem::path lexicon;
  std::filesystem::path boosters;
  std::filesystem::path inverters;
  std::filesystem::path emoticons;
  std::filesystem::path domain_aliases;
  std::filesystem::path contractions;
  std::filesystem::path aspect_keywords;

  std::size_t min_tweets = 30;
  double pos_threshold = 0.7;
  double neg_threshold = 0.3;
  double english_threshold = 0.15;
  std::size_t title_min_token_len = 4;
  aspects::Mode aspect_mode = aspects::Mode::DoubleCount;
  std::vector<double> bins{0.85, 0.8, 0.75};
  summarize::CorrelationMethod correlation = summarize::CorrelationMethod::Spearman;
  std::size_t workers = 1;

  std::size_t top_k = 50;
  int band_min = 2;
  int band_max = 5;
  std::uint64_t min_total_freq = 1;
  std::size_t histogram_bins = 10;

  /// Parses and assigns one setting. Throws ConfigError naming the key.
  void set(std::string_view key, std::string_view value);
  /// Throws ConfigError naming the first offending field.
  void validate() const;

  static const std::vector<std::string>& keys();
};

/// Applies "key=value" lines; blank lines and '#' comments are skipped.
void apply_config_file(PipelineConfig& config, const std::filesystem::path& path);

/// Term, booster, inverter and emoticon lists from the configured paths;
/// the bundled seed list fills in whatever is not configured.
senti::StrengthLexicon load_lexicon(const PipelineConfig& config, Diagnostics& diag);

struct PreprocessSummary {
  report::DropStats stats;
  std::filesystem::path cleaned;
};

/// Cleans and deduplicates `config.tweets`, writing cleaned.jsonl and
/// drop_stats.tsv under `config.out`. Throws InputError on an empty input.
PreprocessSummary run_preprocess(const PipelineConfig& config, Diagnostics& diag);

struct LexgenSummary {
  std::size_t texts = 0;
  std::size_t tokens = 0;
  std::size_t exported = 0;
  bool gold_labels = false;
};

/// Builds the corpus lexicon from cleaned tweets. Gold labels are used when
/// every record has one; otherwise tweets are labeled by the configured
/// lexicon. Writes lexicon_table.tsv, top_positive.tsv, top_negative.tsv and
/// strength_list.tsv.
LexgenSummary run_lexgen(const PipelineConfig& config, Diagnostics& diag);

struct AnalyzeSummary {
  std::size_t tweets = 0;
  std::size_t articles = 0;
  std::size_t discarded_articles = 0;
};

/// Scores cleaned tweets and writes article_sentiment.tsv, domain_summary.tsv,
/// distribution.tsv, normal_fits.tsv, score_histogram.tsv, correlation.tsv
/// and aspects.tsv under `config.out`.
AnalyzeSummary run_analyze(const PipelineConfig& config, Diagnostics& diag);

inline const std::vector<std::string> kAnalyzeReports{
    "article_sentiment.tsv", "domain_summary.tsv", "distribution.tsv", "normal_fits.tsv",
    "correlation.tsv",       "aspects.tsv",        "score_histogram.tsv"};

}  // namespace altsent::pipeline

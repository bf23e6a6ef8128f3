#include "altsent/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "altsent/corpus.hpp"
#include "altsent/lexgen.hpp"
#include "altsent/parallel.hpp"
#include "altsent/preprocess.hpp"

namespace altsent::pipeline {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  value = trim(value);
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (value.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError(std::string(key), fmt::format("invalid number '{}'", value));
  }
  return out;
}

std::ofstream open_output(const std::filesystem::path& dir, std::string_view name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(fmt::format("cannot write {}", path.string()));
  return out;
}

std::vector<CleanTweet> load_clean(const std::filesystem::path& path, Diagnostics& diag) {
  auto batch = load_tweets(path, diag);
  if (batch.records == 0) throw InputError(fmt::format("{}: no records", path.string()));
  std::vector<CleanTweet> out;
  out.reserve(batch.tweets.size());
  for (auto& t : batch.tweets) {
    out.push_back({std::move(t.altmetric_id), std::move(t.tweet_id), std::move(t.text),
                   std::move(t.posted_at), std::move(t.label), std::nullopt});
  }
  return out;
}

}  // namespace

const std::vector<std::string>& PipelineConfig::keys() {
  static const std::vector<std::string> k{
      "tweets",         "articles",       "out",           "lexicon",
      "boosters",       "inverters",      "emoticons",     "domain_aliases",
      "contractions",   "aspect_keywords", "min_tweets",   "pos_threshold",
      "neg_threshold",  "english_threshold", "title_min_token_len", "aspect_mode",
      "bins",           "correlation",    "workers",       "top_k",
      "band_min",       "band_max",       "min_total_freq", "histogram_bins"};
  return k;
}

void PipelineConfig::set(std::string_view key, std::string_view raw) {
  const auto value = trim(raw);
  const std::string k(key);
  if (k == "tweets") {
    tweets = value;
  } else if (k == "articles") {
    articles = value;
  } else if (k == "out") {
    out = value;
  } else if (k == "lexicon") {
    lexicon = value;
  } else if (k == "boosters") {
    boosters = value;
  } else if (k == "inverters") {
    inverters = value;
  } else if (k == "emoticons") {
    emoticons = value;
  } else if (k == "domain_aliases") {
    domain_aliases = value;
  } else if (k == "contractions") {
    contractions = value;
  } else if (k == "aspect_keywords") {
    aspect_keywords = value;
  } else if (k == "min_tweets") {
    min_tweets = parse_number<std::size_t>(k, value);
  } else if (k == "pos_threshold") {
    pos_threshold = parse_number<double>(k, value);
  } else if (k == "neg_threshold") {
    neg_threshold = parse_number<double>(k, value);
  } else if (k == "english_threshold") {
    english_threshold = parse_number<double>(k, value);
  } else if (k == "title_min_token_len") {
    title_min_token_len = parse_number<std::size_t>(k, value);
  } else if (k == "aspect_mode") {
    const auto m = aspects::parse_mode(value);
    if (!m) throw ConfigError(k, fmt::format("expected double_count or exclusive, got '{}'", value));
    aspect_mode = *m;
  } else if (k == "bins") {
    bins.clear();
    std::size_t start = 0;
    while (start <= value.size()) {
      auto end = value.find(',', start);
      if (end == std::string_view::npos) end = value.size();
      bins.push_back(parse_number<double>(k, value.substr(start, end - start)));
      start = end + 1;
    }
  } else if (k == "correlation") {
    if (value == "spearman") {
      correlation = summarize::CorrelationMethod::Spearman;
    } else if (value == "pearson") {
      correlation = summarize::CorrelationMethod::Pearson;
    } else {
      throw ConfigError(k, fmt::format("expected spearman or pearson, got '{}'", value));
    }
  } else if (k == "workers") {
    workers = parse_number<std::size_t>(k, value);
  } else if (k == "top_k") {
    top_k = parse_number<std::size_t>(k, value);
  } else if (k == "band_min") {
    band_min = parse_number<int>(k, value);
  } else if (k == "band_max") {
    band_max = parse_number<int>(k, value);
  } else if (k == "min_total_freq") {
    min_total_freq = parse_number<std::uint64_t>(k, value);
  } else if (k == "histogram_bins") {
    histogram_bins = parse_number<std::size_t>(k, value);
  } else {
    throw ConfigError(k, "unknown setting");
  }
}

void PipelineConfig::validate() const {
  if (min_tweets < 1) throw ConfigError("min_tweets", "must be at least 1");
  if (!(neg_threshold >= 0.0)) throw ConfigError("neg_threshold", "must be >= 0");
  if (!(pos_threshold <= 1.0)) throw ConfigError("pos_threshold", "must be <= 1");
  if (!(neg_threshold < pos_threshold)) {
    throw ConfigError("neg_threshold", "must be below pos_threshold");
  }
  if (!(english_threshold >= 0.0 && english_threshold <= 1.0)) {
    throw ConfigError("english_threshold", "must lie in [0, 1]");
  }
  if (title_min_token_len < 1) throw ConfigError("title_min_token_len", "must be at least 1");
  for (std::size_t i = 0; i < bins.size(); ++i) {
    if (!(bins[i] > 0.0 && bins[i] < 1.0)) throw ConfigError("bins", "thresholds must lie in (0, 1)");
    if (i > 0 && !(bins[i] < bins[i - 1])) throw ConfigError("bins", "thresholds must be descending");
  }
  if (workers < 1) throw ConfigError("workers", "must be at least 1");
  if (top_k < 1) throw ConfigError("top_k", "must be at least 1");
  if (band_min < senti::kMinStrength || band_min > senti::kMaxStrength) {
    throw ConfigError("band_min", "must lie in 2..5");
  }
  if (band_max < band_min || band_max > senti::kMaxStrength) {
    throw ConfigError("band_max", "must lie in band_min..5");
  }
  if (min_total_freq < 1) throw ConfigError("min_total_freq", "must be at least 1");
  if (histogram_bins < 1) throw ConfigError("histogram_bins", "must be at least 1");
}

void apply_config_file(PipelineConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", fmt::format("cannot open {}", path.string()));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config", fmt::format("{}:{}: expected key=value", path.string(), line_no));
    }
    config.set(trim(body.substr(0, eq)), body.substr(eq + 1));
  }
}

senti::StrengthLexicon load_lexicon(const PipelineConfig& config, Diagnostics& diag) {
  auto lex = config.lexicon.empty() ? senti::seed_lexicon()
                                    : senti::load_strength_lexicon(config.lexicon, diag);
  if (!config.lexicon.empty()) {
    // Seed modifiers unless overridden below.
    const auto seed = senti::seed_lexicon();
    if (config.boosters.empty()) {
      for (const auto& [k, v] : seed.boosters) {
        if (!lex.term_strengths.contains(k)) lex.boosters.emplace(k, v);
      }
    }
    if (config.inverters.empty()) {
      for (const auto& k : seed.inverters) {
        if (!lex.term_strengths.contains(k) && !lex.boosters.contains(k)) lex.inverters.insert(k);
      }
    }
  }
  if (!config.boosters.empty()) {
    lex.boosters.clear();
    senti::load_boosters(lex, config.boosters, diag);
  }
  if (!config.inverters.empty()) {
    lex.inverters.clear();
    senti::load_inverters(lex, config.inverters, diag);
  }
  if (!config.emoticons.empty()) senti::load_emoticons(lex, config.emoticons, diag);
  return lex;
}

PreprocessSummary run_preprocess(const PipelineConfig& config, Diagnostics& diag) {
  preprocess::Config pc;
  pc.english_threshold = config.english_threshold;
  pc.title_min_token_len = config.title_min_token_len;
  if (!config.contractions.empty()) {
    pc.contractions = preprocess::ContractionTable::load(config.contractions, diag);
  }

  ArticleMap meta;
  if (!config.articles.empty()) {
    DomainVocabulary vocab;
    if (!config.domain_aliases.empty()) vocab.load_aliases(config.domain_aliases, diag);
    meta = load_articles(config.articles, vocab, diag);
  }

  const auto batch = load_tweets(config.tweets, diag);
  if (batch.records == 0) throw InputError(fmt::format("{}: no records", config.tweets.string()));

  std::vector<CleanTweet> cleaned(batch.tweets.size());
  parallel_for(batch.tweets.size(), config.workers, [&](std::size_t i) {
    const auto& t = batch.tweets[i];
    std::optional<std::string_view> title;
    if (const auto it = meta.find(t.altmetric_id); it != meta.end() && !it->second.title.empty()) {
      title = it->second.title;
    }
    cleaned[i] = preprocess::clean_tweet(t, title, pc);
  });
  preprocess::dedupe(cleaned);

  PreprocessSummary summary;
  auto& s = summary.stats;
  s.records = batch.records;
  s.malformed = batch.skipped;
  for (const auto& t : cleaned) {
    if (t.kept()) {
      ++s.kept;
    } else if (*t.dropped == DropReason::NonEnglish) {
      ++s.non_english;
    } else if (*t.dropped == DropReason::Duplicate) {
      ++s.duplicate;
    } else {
      ++s.empty;
    }
  }

  summary.cleaned = config.out / "cleaned.jsonl";
  {
    auto out = open_output(config.out, "cleaned.jsonl");
    report::write_clean_tweets(out, cleaned);
  }
  {
    auto out = open_output(config.out, "drop_stats.tsv");
    report::write_drop_stats(out, s);
  }
  return summary;
}

LexgenSummary run_lexgen(const PipelineConfig& config, Diagnostics& diag) {
  const auto tweets = load_clean(config.tweets, diag);
  if (tweets.empty()) throw InputError(fmt::format("{}: no usable records", config.tweets.string()));

  LexgenSummary summary;
  summary.gold_labels = std::all_of(tweets.begin(), tweets.end(), [](const CleanTweet& t) {
    return t.label && senti::parse_label(*t.label);
  });
  if (!summary.gold_labels &&
      std::any_of(tweets.begin(), tweets.end(), [](const CleanTweet& t) { return t.label.has_value(); })) {
    diag.warn("some records lack a valid gold label; labeling every tweet with the lexicon");
  }

  std::vector<senti::LabeledText> corpus(tweets.size());
  std::optional<senti::StrengthLexicon> lex;
  if (!summary.gold_labels) lex = load_lexicon(config, diag);
  parallel_for(tweets.size(), config.workers, [&](std::size_t i) {
    corpus[i].text = tweets[i].text;
    corpus[i].label = summary.gold_labels ? *senti::parse_label(*tweets[i].label)
                                          : senti::classify_trinary(senti::score_text(*lex, tweets[i].text));
  });

  lexgen::Options options;
  options.min_total_freq = config.min_total_freq;
  lexgen::LexiconTable table;
  try {
    table = lexgen::generate_lexicon(corpus, options, diag);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto exported =
      lexgen::export_strength_list(table, config.top_k, {config.band_min, config.band_max}, diag);

  summary.texts = corpus.size();
  summary.tokens = table.entries.size();
  summary.exported = exported.term_strengths.size();
  {
    auto out = open_output(config.out, "lexicon_table.tsv");
    lexgen::write_table(out, table);
  }
  {
    auto out = open_output(config.out, "top_positive.tsv");
    lexgen::write_top_listing(out, table, lexgen::View::Positive, config.top_k);
  }
  {
    auto out = open_output(config.out, "top_negative.tsv");
    lexgen::write_top_listing(out, table, lexgen::View::Negative, config.top_k);
  }
  {
    auto out = open_output(config.out, "strength_list.tsv");
    senti::write_strength_list(out, exported);
  }
  return summary;
}

AnalyzeSummary run_analyze(const PipelineConfig& config, Diagnostics& diag) {
  const auto lex = load_lexicon(config, diag);
  DomainVocabulary vocab;
  if (!config.domain_aliases.empty()) vocab.load_aliases(config.domain_aliases, diag);
  const auto meta = config.articles.empty() ? ArticleMap{} : load_articles(config.articles, vocab, diag);
  const auto keywords = config.aspect_keywords.empty()
                            ? aspects::KeywordTable::defaults()
                            : aspects::KeywordTable::load(config.aspect_keywords, diag);
  const auto tweets = load_clean(config.tweets, diag);

  AnalyzeSummary summary;
  summary.tweets = tweets.size();

  // Tweet level: labels for the overall and per-year distribution.
  std::vector<senti::Label> labels(tweets.size());
  parallel_for(tweets.size(), config.workers, [&](std::size_t i) {
    labels[i] = senti::classify_trinary(senti::score_text(lex, tweets[i].text));
  });
  std::optional<summarize::Distribution> overall;
  if (!labels.empty()) overall = summarize::sentiment_distribution(labels);
  std::vector<std::optional<std::string>> stamps;
  stamps.reserve(tweets.size());
  for (const auto& t : tweets) stamps.push_back(t.posted_at);
  const auto by_year = summarize::distribution_by_year(labels, stamps);

  // Article level.
  const auto joined = join(tweets, meta, config.min_tweets, diag);
  summary.articles = joined.docs.size();
  summary.discarded_articles = joined.discarded_articles;
  if (joined.docs.empty()) {
    diag.warn(fmt::format("no article has at least {} tweets; article reports are empty",
                          config.min_tweets));
  }

  const summarize::Thresholds thresholds{config.pos_threshold, config.neg_threshold};
  std::vector<summarize::ScoredArticle> scored(joined.docs.size());
  std::vector<aspects::AspectProfile> profiles(joined.docs.size());
  parallel_for(joined.docs.size(), config.workers, [&](std::size_t i) {
    scored[i] = summarize::article_score(joined.docs[i], lex, config.min_tweets, thresholds);
    profiles[i] = aspects::match_aspects(joined.docs[i], keywords, config.aspect_mode);
  });

  const auto domains = summarize::domain_summary(scored);
  const auto histogram = summarize::score_histogram(scored, config.histogram_bins);

  std::vector<summarize::ArticleSentiment> sentiments;
  std::vector<std::string> ids;
  for (const auto& a : scored) {
    sentiments.push_back(a.sentiment);
    ids.push_back(a.sentiment.altmetric_id);
  }
  FileCitationSource citations(meta);
  const auto counts = fetch_citations(citations, ids);
  const auto correlation =
      summarize::citation_correlation(sentiments, counts, config.bins, config.correlation);

  const auto aspect_rows = aspects::domain_aspect_table(profiles, config.aspect_mode);

  {
    auto out = open_output(config.out, "article_sentiment.tsv");
    report::write_article_sentiment(out, scored);
  }
  {
    auto out = open_output(config.out, "domain_summary.tsv");
    report::write_domain_summary(out, domains);
  }
  {
    auto out = open_output(config.out, "normal_fits.tsv");
    report::write_normal_fits(out, domains);
  }
  {
    auto out = open_output(config.out, "score_histogram.tsv");
    report::write_histogram(out, histogram);
  }
  {
    auto out = open_output(config.out, "distribution.tsv");
    report::write_distribution(out, overall ? &*overall : nullptr, by_year);
  }
  {
    auto out = open_output(config.out, "correlation.tsv");
    report::write_correlation(out, correlation, config.correlation);
  }
  {
    auto out = open_output(config.out, "aspects.tsv");
    report::write_aspects(out, aspect_rows, config.aspect_mode);
  }
  return summary;
}

}  // namespace altsent::pipeline

// altsent: preprocess, lexgen, analyze and score from the command line.
#include <algorithm>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "altsent/pipeline.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr std::size_t kMaxWarnings = 20;

void flush_warnings(const altsent::Diagnostics& diag) {
  const auto& w = diag.warnings;
  for (std::size_t i = 0; i < std::min(w.size(), kMaxWarnings); ++i) {
    std::cerr << "warning: " << w[i] << '\n';
  }
  if (w.size() > kMaxWarnings) {
    std::cerr << fmt::format("warning: ... {} more warnings\n", w.size() - kMaxWarnings);
  }
}

std::string flag_name(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return "--" + key;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace altsent;
  CLI::App app{"Tweet sentiment pipeline for altmetrics corpora"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("-c,--config", config_path, "key=value settings file");

  std::map<std::string, std::string> flags;
  std::map<std::string, CLI::Option*> options;
  for (const auto& key : pipeline::PipelineConfig::keys()) {
    options[key] = app.add_option(flag_name(key), flags[key]);
  }

  auto* pre = app.add_subcommand("preprocess", "clean and deduplicate raw tweets");
  auto* lex = app.add_subcommand("lexgen", "build a corpus lexicon from cleaned tweets");
  auto* ana = app.add_subcommand("analyze", "article, domain, distribution, correlation and aspect reports");
  auto* sco = app.add_subcommand("score", "score one text");
  std::vector<std::string> words;
  sco->add_option("text", words, "text to score (stdin when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  Diagnostics diag;
  pipeline::PipelineConfig config;
  try {
    if (!config_path.empty()) pipeline::apply_config_file(config, config_path);
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) config.set(key, flags[key]);
    }
    config.validate();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  const bool needs_tweets = !sco->parsed();
  if (needs_tweets && config.tweets.empty()) {
    std::cerr << "error: tweets: no input file given\n";
    return kUsage;
  }

  try {
    if (pre->parsed()) {
      const auto s = pipeline::run_preprocess(config, diag);
      flush_warnings(diag);
      std::cout << fmt::format("records={} kept={} non_english={} duplicate={} empty={} malformed={}\n",
                               s.stats.records, s.stats.kept, s.stats.non_english, s.stats.duplicate,
                               s.stats.empty, s.stats.malformed);
    } else if (lex->parsed()) {
      const auto s = pipeline::run_lexgen(config, diag);
      flush_warnings(diag);
      std::cout << fmt::format("texts={} tokens={} exported={} labels={}\n", s.texts, s.tokens,
                               s.exported, s.gold_labels ? "gold" : "lexicon");
    } else if (ana->parsed()) {
      const auto s = pipeline::run_analyze(config, diag);
      flush_warnings(diag);
      std::cout << fmt::format("tweets={} articles={} discarded_articles={}\n", s.tweets, s.articles,
                               s.discarded_articles);
    } else {
      std::string text;
      if (!words.empty()) {
        for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
      } else if (!sco->get_option("text")->count()) {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      }
      const auto lexicon = pipeline::load_lexicon(config, diag);
      flush_warnings(diag);
      const auto score = senti::score_text(lexicon, text);
      std::cout << fmt::format("{}\t{}\t{}\n", score.positive, score.negative,
                               senti::label_name(senti::classify_trinary(score)));
    }
  } catch (const ConfigError& e) {
    flush_warnings(diag);
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    flush_warnings(diag);
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}

// Writes a reproducible synthetic corpus: tweets.jsonl and articles.tsv,
// plus an optional labeled file of already clean texts.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "altsent/report.hpp"
#include "altsent/synthetic.hpp"

int main(int argc, char** argv) {
  using namespace altsent;
  CLI::App app{"Synthetic altmetrics corpus generator"};
  synthetic::Options opt;
  std::filesystem::path out = ".";
  std::size_t labeled = 0;
  bool clean = false;
  app.add_option("--out", out, "output directory");
  app.add_option("--seed", opt.seed);
  app.add_option("--articles", opt.articles)->check(CLI::PositiveNumber);
  app.add_option("--min-tweets", opt.min_tweets_per_article);
  app.add_option("--max-tweets", opt.max_tweets_per_article);
  app.add_option("--labeled", labeled, "also write labeled.jsonl with this many texts");
  app.add_flag("--clean", clean, "no mentions, URLs or entities");
  CLI11_PARSE(app, argc, argv);
  if (opt.min_tweets_per_article > opt.max_tweets_per_article) {
    std::cerr << "error: --min-tweets exceeds --max-tweets\n";
    return 1;
  }
  opt.noisy = !clean;

  std::filesystem::create_directories(out);
  const auto corpus = synthetic::generate(opt);
  {
    std::vector<CleanTweet> rows;
    rows.reserve(corpus.tweets.size());
    for (const auto& t : corpus.tweets) {
      rows.push_back({t.altmetric_id, t.tweet_id, t.text, t.posted_at, t.label, std::nullopt});
    }
    std::ofstream f(out / "tweets.jsonl", std::ios::binary);
    report::write_clean_tweets(f, rows);
  }
  {
    std::ofstream f(out / "articles.tsv", std::ios::binary);
    f << "altmetric_id\ttitle\tcitation_count\tdomains\n";
    for (const auto& [id, meta] : corpus.articles) {
      std::string domains;
      for (const auto d : meta.domain_codes) {
        if (!domains.empty()) domains += ';';
        domains += discipline_name(d);
      }
      f << fmt::format("{}\t{}\t{}\t{}\n", id, meta.title, meta.citation_count, domains);
    }
  }
  if (labeled > 0) {
    std::vector<CleanTweet> rows;
    std::size_t i = 0;
    for (auto& t : synthetic::labeled_texts(opt.seed, labeled)) {
      rows.push_back({"L", fmt::format("L{:07}", ++i), std::move(t.text), std::nullopt,
                      std::string(senti::label_name(t.label)), std::nullopt});
    }
    std::ofstream f(out / "labeled.jsonl", std::ios::binary);
    report::write_clean_tweets(f, rows);
  }
  std::cout << fmt::format("tweets={} articles={}\n", corpus.tweets.size(), corpus.articles.size());
  return 0;
}

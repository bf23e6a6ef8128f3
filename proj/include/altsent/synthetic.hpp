#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "altsent/corpus.hpp"
#include "altsent/senti.hpp"

namespace altsent::synthetic {

/// Parameters of a reproducible synthetic altmetrics corpus.
struct Options {
  std::uint64_t seed = 42;
  std::size_t articles = 40;
  std::size_t min_tweets_per_article = 10;
  std::size_t max_tweets_per_article = 60;
  double p_positive = 0.22;
  double p_negative = 0.14;
  bool noisy = true;  // mentions, URLs, hashtags, entities, contractions, casing
};

struct Corpus {
  std::vector<Tweet> tweets;  // carry gold labels in Tweet::label
  ArticleMap articles;
};

/// Same options give the same corpus on every platform (mt19937_64 with
/// explicit range reduction).
Corpus generate(const Options& options);

/// `n` short already-clean labeled texts for lexicon induction tests.
std::vector<senti::LabeledText> labeled_texts(std::uint64_t seed, std::size_t n);

}  // namespace altsent::synthetic

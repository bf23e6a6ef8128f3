#include "altsent/synthetic.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string_view>

#include <fmt/format.h>

namespace altsent::synthetic {

namespace {

constexpr std::array<std::string_view, 48> kFiller{
    "paper",    "study",     "new",       "research", "data",    "article", "published",
    "journal",  "authors",   "on",        "the",      "of",      "in",      "this",
    "a",        "about",     "read",      "via",      "cells",   "patients", "climate",
    "brain",    "cancer",    "gene",      "species",  "ocean",   "trial",   "review",
    "analysis", "evidence",  "effect",    "risk",     "health",  "children", "water",
    "energy",   "students",  "university", "team",    "report",  "is",      "are",
    "for",      "with",      "from",      "and",      "we",      "it"};

constexpr std::array<std::string_view, 14> kAspectWords{
    "methods",   "method",     "results", "findings", "abstract", "title",    "model",
    "approach",  "conclusion", "summary", "topic",    "experiment", "technique", "evaluation"};

// "excellent" is listed several times so it dominates positive-only usage.
constexpr std::array<std::string_view, 18> kPositive{
    "excellent", "excellent", "excellent", "excellent", "great", "amazing",
    "awesome",   "novel",     "congratulations", "interesting", "nice", "cool",
    "brilliant", "impressive", "wonderful", "exciting", "love", "happy"};

constexpr std::array<std::string_view, 14> kNegative{
    "bad",      "terrible", "flawed",  "misleading", "worrying", "disappointing", "fraud",
    "dubious",  "wrong",    "harmful", "useless",    "awful",    "sad",           "crisis"};

constexpr std::array<std::string_view, 12> kTopics{
    "microbiome", "graphene", "neutrino", "malaria", "glacier", "vaccine",
    "protein",    "algorithm", "dementia", "soil",    "coral",   "obesity"};

constexpr std::array<std::string_view, 4> kContractions{"isn't", "don't", "wasn't", "can't"};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <typename Array>
  std::string_view pick(const Array& a) {
    return a[below(a.size())];
  }

 private:
  std::mt19937_64 engine_;
};

senti::Label draw_label(Rng& rng, double p_pos, double p_neg) {
  const double u = rng.unit();
  if (u < p_pos) return senti::Label::Positive;
  if (u < p_pos + p_neg) return senti::Label::Negative;
  return senti::Label::Neutral;
}

std::vector<std::string> clean_words(Rng& rng, senti::Label label, std::string_view topic) {
  std::vector<std::string> words;
  const std::size_t filler = 4 + rng.below(8);
  for (std::size_t i = 0; i < filler; ++i) words.emplace_back(rng.pick(kFiller));
  if (rng.chance(0.3)) words.emplace_back(rng.pick(kAspectWords));
  if (rng.chance(0.4)) words.emplace_back(topic);
  const std::size_t emotive = label == senti::Label::Neutral ? 0 : 1 + rng.below(2);
  for (std::size_t i = 0; i < emotive; ++i) {
    const auto w = label == senti::Label::Positive ? rng.pick(kPositive) : rng.pick(kNegative);
    words.insert(words.begin() + static_cast<std::ptrdiff_t>(rng.below(words.size() + 1)),
                 std::string(w));
  }
  return words;
}

std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string render(Rng& rng, std::vector<std::string> words, bool noisy) {
  std::string body;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) body += ' ';
    body += (noisy && rng.chance(0.1)) ? capitalize(words[i]) : words[i];
  }
  if (rng.chance(0.15)) {
    body += "!!";
  } else if (rng.chance(0.2)) {
    body += '!';
  } else {
    body += '.';
  }
  if (!noisy) return body;

  std::string out;
  if (rng.chance(0.35)) out += fmt::format("RT @user{}: ", rng.below(500));
  if (rng.chance(0.1)) out += fmt::format("{} ", rng.pick(kContractions));
  out += body;
  if (rng.chance(0.2)) out += " &amp; more";
  if (rng.chance(0.6)) out += fmt::format(" http://t.co/x{}Yz", rng.below(100000));
  if (rng.chance(0.3)) out += fmt::format(" #{}", capitalize(std::string(rng.pick(kTopics))));
  if (rng.chance(0.05)) out += " @journal_bot";
  return out;
}

}  // namespace

Corpus generate(const Options& options) {
  Rng rng(options.seed);
  Corpus corpus;
  const auto domains = all_disciplines();
  const std::size_t spread = options.max_tweets_per_article >= options.min_tweets_per_article
                                 ? options.max_tweets_per_article - options.min_tweets_per_article + 1
                                 : 1;
  std::size_t tweet_no = 0;
  for (std::size_t a = 0; a < options.articles; ++a) {
    ArticleMeta meta;
    meta.altmetric_id = fmt::format("A{:05}", a + 1);
    const auto topic = rng.pick(kTopics);
    meta.title = fmt::format("The role of {} in {} research", topic, rng.pick(kFiller));
    meta.citation_count = rng.below(250);
    meta.domain_codes.insert(domains[rng.below(domains.size())]);
    if (rng.chance(0.4)) meta.domain_codes.insert(domains[rng.below(domains.size())]);

    // Each article leans a little positive or negative; a few are acclaimed.
    const double lean = (rng.unit() - 0.5) * 0.2;
    double p_pos = std::clamp(options.p_positive + lean, 0.0, 1.0);
    double p_neg = std::clamp(options.p_negative - lean / 2, 0.0, 1.0 - p_pos);
    if (rng.chance(0.2)) {
      p_pos = 0.85 + 0.15 * rng.unit();
      p_neg = 0.0;
    }

    const std::size_t n = options.min_tweets_per_article + rng.below(spread);
    for (std::size_t i = 0; i < n; ++i) {
      const auto label = draw_label(rng, p_pos, p_neg);
      Tweet t;
      t.altmetric_id = meta.altmetric_id;
      t.tweet_id = fmt::format("T{:07}", ++tweet_no);
      t.text = render(rng, clean_words(rng, label, topic), options.noisy);
      t.posted_at = fmt::format("{}-{:02}-{:02}T{:02}:00:00Z", 2012 + rng.below(5),
                                1 + rng.below(12), 1 + rng.below(28), rng.below(24));
      t.label = std::string(senti::label_name(label));
      corpus.tweets.push_back(std::move(t));
    }
    corpus.articles.emplace(meta.altmetric_id, std::move(meta));
  }
  return corpus;
}

std::vector<senti::LabeledText> labeled_texts(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  std::vector<senti::LabeledText> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto label = draw_label(rng, 0.3, 0.25);
    auto words = clean_words(rng, label, rng.pick(kTopics));
    std::string text;
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (k) text += ' ';
      text += words[k];
    }
    out.push_back({std::move(text), label});
  }
  return out;
}

}  // namespace altsent::synthetic

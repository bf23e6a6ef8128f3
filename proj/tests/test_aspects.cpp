#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "altsent/aspects.hpp"

using namespace altsent;
using namespace altsent::aspects;

namespace {

ArticleDoc doc(std::string id, DomainSet domains, std::vector<std::string> texts) {
  ArticleDoc d;
  d.altmetric_id = std::move(id);
  d.domain_codes = std::move(domains);
  std::size_t n = 0;
  for (auto& t : texts) {
    d.tweets.push_back({d.altmetric_id, std::to_string(++n), std::move(t), "2014-01-01", std::nullopt,
                        std::nullopt});
  }
  d.tweet_count = d.tweets.size();
  return d;
}

}  // namespace

TEST(Names, RoundTrip) {
  for (std::size_t i = 0; i < kAspectCount; ++i) {
    const auto a = static_cast<Aspect>(i);
    EXPECT_EQ(parse_aspect(aspect_name(a)), a);
  }
  EXPECT_EQ(parse_mode("exclusive"), Mode::Exclusive);
  EXPECT_EQ(parse_mode("double_count"), Mode::DoubleCount);
  EXPECT_FALSE(parse_mode("both"));
}

TEST(Keywords, PrefixMatching) {
  const auto k = KeywordTable::defaults();
  EXPECT_EQ(k.match_token("methods"), std::vector<Aspect>{Aspect::Methodology});
  EXPECT_EQ(k.match_token("findings"), std::vector<Aspect>{Aspect::ResultsConclusion});
  EXPECT_TRUE(k.match_token("remodel").empty());
  EXPECT_EQ(k.keywords(Aspect::Methodology).size(), 9u);
  EXPECT_TRUE(k.keywords(Aspect::Other).empty());
}

TEST(TweetAspects, DoubleCountReportsEveryAspect) {
  const auto k = KeywordTable::defaults();
  EXPECT_EQ(tweet_aspects("Great METHODS, and results!", k, Mode::DoubleCount),
            (std::vector<Aspect>{Aspect::Methodology, Aspect::ResultsConclusion}));
  EXPECT_EQ(tweet_aspects("nothing here", k, Mode::DoubleCount), std::vector<Aspect>{Aspect::Other});
  EXPECT_EQ(tweet_aspects("", k, Mode::Exclusive), std::vector<Aspect>{Aspect::Other});
}

TEST(TweetAspects, ExclusiveTakesEarliestMatch) {
  const auto k = KeywordTable::defaults();
  EXPECT_EQ(tweet_aspects("results from a new model", k, Mode::Exclusive),
            std::vector<Aspect>{Aspect::ResultsConclusion});
  EXPECT_EQ(tweet_aspects("model results", k, Mode::Exclusive),
            std::vector<Aspect>{Aspect::Methodology});
}

TEST(Opinions, OneRecordPerAspect) {
  const auto d = doc("A", {Discipline::Medicine}, {"the method and results", "hi"});
  const auto ops = extract_opinions(d, KeywordTable::defaults(), Mode::DoubleCount);
  ASSERT_EQ(ops.size(), 3u);
  EXPECT_EQ(ops[0].entity, "A");
  EXPECT_EQ(ops[0].holder, "1");
  EXPECT_EQ(ops[2].aspect, Aspect::Other);
  EXPECT_EQ(ops[2].time, "2014-01-01");
}

TEST(DomainTable, DoubleCountPercentages) {
  const auto k = KeywordTable::defaults();
  const std::vector<AspectProfile> ps{
      match_aspects(doc("A", {Discipline::Medicine}, {"method results", "title", "x", "y"}), k,
                    Mode::DoubleCount),
      match_aspects(doc("B", {Discipline::Medicine, Discipline::Chemistry}, {"abstract", "z"}), k,
                    Mode::DoubleCount)};
  const auto rows = domain_aspect_table(ps, Mode::DoubleCount);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].domain, Discipline::Medicine);
  EXPECT_EQ(rows[0].doc_count, 2u);
  const auto& r = rows[0].pct;
  EXPECT_NEAR(r[0], 100.0 / 6, 1e-12);
  EXPECT_NEAR(r[1], 100.0 / 6, 1e-12);
  EXPECT_NEAR(r[2], 100.0 / 6, 1e-12);
  EXPECT_NEAR(r[3], 100.0 / 6, 1e-12);
  EXPECT_NEAR(r[4], 300.0 / 6, 1e-12);
  EXPECT_EQ(rows[1].domain, Discipline::Chemistry);
  EXPECT_NEAR(rows[1].pct[1], 50.0, 1e-12);
}

TEST(DomainTable, ExclusiveRowsSumToHundred) {
  const auto k = KeywordTable::defaults();
  const std::vector<AspectProfile> ps{match_aspects(
      doc("A", {Discipline::PhysicsAstronomy}, {"method results", "title", "x"}), k, Mode::Exclusive)};
  const auto rows = domain_aspect_table(ps, Mode::Exclusive);
  ASSERT_EQ(rows.size(), 1u);
  double sum = 0;
  for (double v : rows[0].pct) sum += v;
  EXPECT_DOUBLE_EQ(sum, 100.0);
  EXPECT_DOUBLE_EQ(rows[0].pct[0], 33.34);  // ties go to the earlier column
  EXPECT_DOUBLE_EQ(rows[0].pct[2], 33.33);
  EXPECT_DOUBLE_EQ(rows[0].pct[3], 0.0);
}

TEST(KeywordFile, LoadAndErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "altsent_aspects_kw";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "k.tsv") << "# aspect\tkeywords\nmethodology\tprotocol, assay\nother\tx\n"
                                    "results\toutcome\n";
  }
  Diagnostics diag;
  const auto k = KeywordTable::load(dir / "k.tsv", diag);
  EXPECT_EQ(k.keywords(Aspect::Methodology), (std::vector<std::string>{"protocol", "assay"}));
  EXPECT_EQ(k.keywords(Aspect::ResultsConclusion), std::vector<std::string>{"outcome"});
  EXPECT_TRUE(k.keywords(Aspect::Title).empty());
  EXPECT_EQ(diag.count(), 1u);
  { std::ofstream(dir / "empty.tsv") << "# nothing\n"; }
  EXPECT_THROW(KeywordTable::load(dir / "empty.tsv", diag), InputError);
  EXPECT_THROW(KeywordTable::load(dir / "missing.tsv", diag), InputError);
  std::filesystem::remove_all(dir);
}

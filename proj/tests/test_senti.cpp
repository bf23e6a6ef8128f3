#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "altsent/senti.hpp"

using namespace altsent;
using senti::Label;
using senti::SentimentScore;

namespace {

senti::StrengthLexicon demo() {
  senti::StrengthLexicon lex;
  lex.term_strengths = {{"happy", 4}, {"good", 2}, {"great", 3}, {"sad", -3}, {"awful", -4},
                        {"hello", 2}, {"nice", 2}};
  lex.boosters = {{"so", 1}, {"very", 1}, {"slightly", -1}};
  lex.inverters = {"not", "never"};
  return lex;
}

std::string read_file(const std::string& rel) {
  std::ifstream in(std::string(ALTSENT_SOURCE_DIR) + "/" + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Spelling, SqueezesElongation) {
  EXPECT_EQ(senti::correct_spelling("hellllloooo"), "hello");
  EXPECT_EQ(senti::correct_spelling("niice"), "nice");
  EXPECT_EQ(senti::correct_spelling("goood"), "good");
  EXPECT_EQ(senti::correct_spelling("soooo"), "so");
  EXPECT_EQ(senti::correct_spelling("coffee"), "coffee");
  EXPECT_EQ(senti::correct_spelling("book"), "book");
  EXPECT_EQ(senti::correct_spelling("aardvark"), "ardvark");
  EXPECT_EQ(senti::correct_spelling("2000"), "2000");
  EXPECT_EQ(senti::correct_spelling(""), "");
}

TEST(Spelling, CandidatesKeepFinalDouble) {
  const auto c = senti::spelling_candidates("seeee", senti::StrengthLexicon::default_allowed_doubles());
  EXPECT_EQ(c, (std::vector<std::string>{"seeee", "se", "see"}));
  EXPECT_EQ(senti::spelling_candidates("happy", senti::StrengthLexicon::default_allowed_doubles()),
            std::vector<std::string>{"happy"});
}

TEST(Score, EmptyTextIsNeutral) {
  EXPECT_EQ(senti::score_text(demo(), ""), (SentimentScore{1, -1}));
  EXPECT_EQ(senti::classify_trinary({1, -1}), Label::Neutral);
}

TEST(Score, PlainTerms) {
  EXPECT_EQ(senti::score_text(demo(), "a happy day"), (SentimentScore{4, -1}));
  EXPECT_EQ(senti::score_text(demo(), "Happy but sad"), (SentimentScore{4, -3}));
  EXPECT_EQ(senti::score_text(demo(), "hellllloooo there"), (SentimentScore{2, -1}));
  EXPECT_EQ(senti::score_text(demo(), "niice"), (SentimentScore{2, -1}));
}

TEST(Score, InverterFlipsAndIgnoresBooster) {
  EXPECT_EQ(senti::score_text(demo(), "not so happy"), (SentimentScore{1, -4}));
  EXPECT_EQ(senti::score_text(demo(), "not happy"), (SentimentScore{1, -4}));
  EXPECT_EQ(senti::score_text(demo(), "never sad"), (SentimentScore{3, -1}));
  // Outside the two-item window the inverter has no effect.
  EXPECT_EQ(senti::score_text(demo(), "not a very happy"), (SentimentScore{5, -1}));
}

TEST(Score, BoosterClampsToBand) {
  EXPECT_EQ(senti::score_text(demo(), "very good"), (SentimentScore{3, -1}));
  EXPECT_EQ(senti::score_text(demo(), "slightly good"), (SentimentScore{2, -1}));
  EXPECT_EQ(senti::score_text(demo(), "so awful"), (SentimentScore{1, -5}));
  EXPECT_EQ(senti::score_text(demo(), "very very awful"), (SentimentScore{1, -5}));
  // Booster only applies to the next item.
  EXPECT_EQ(senti::score_text(demo(), "very much good"), (SentimentScore{2, -1}));
}

TEST(Score, ExclamationRaisesPositive) {
  EXPECT_EQ(senti::score_text(demo(), "this is sad!"), (SentimentScore{2, -3}));
  EXPECT_EQ(senti::score_text(demo(), "what a day!"), (SentimentScore{2, -1}));
  EXPECT_GE(senti::score_text(demo(), "great!!").positive, 2);
}

TEST(Score, ExclamationRunBoostsPrecedingTerm) {
  EXPECT_EQ(senti::score_text(demo(), "great!!"), (SentimentScore{4, -1}));
  EXPECT_EQ(senti::score_text(demo(), "great!"), (SentimentScore{3, -1}));
  EXPECT_EQ(senti::score_text(demo(), "awful day !!!"), (SentimentScore{2, -5}));
  EXPECT_EQ(senti::score_text(demo(), "happy very happy!!"), (SentimentScore{5, -1}));
}

TEST(Score, SentencesScoredSeparately) {
  // The inverter does not reach across a sentence boundary.
  EXPECT_EQ(senti::score_text(demo(), "not. happy"), (SentimentScore{4, -1}));
  EXPECT_EQ(senti::score_text(demo(), "sad. good? awful"), (SentimentScore{2, -4}));
}

TEST(Score, Emoticons) {
  auto lex = demo();
  lex.emoticons = {{":)", 2}, {":(", -2}};
  EXPECT_EQ(senti::score_text(lex, "ok :)"), (SentimentScore{2, -1}));
  EXPECT_EQ(senti::score_text(lex, "ok :("), (SentimentScore{1, -2}));
}

TEST(Classify, Trinary) {
  EXPECT_EQ(senti::classify_trinary({4, -1}), Label::Positive);
  EXPECT_EQ(senti::classify_trinary({2, -3}), Label::Negative);
  EXPECT_EQ(senti::classify_trinary({3, -3}), Label::Neutral);
}

TEST(Labels, RoundTrip) {
  for (auto l : {Label::Positive, Label::Negative, Label::Neutral}) {
    EXPECT_EQ(senti::parse_label(senti::label_name(l)), l);
  }
  EXPECT_FALSE(senti::parse_label("Positive"));
}

TEST(Lexicon, ParseRejectsOutOfBandAndWarns) {
  Diagnostics diag;
  std::istringstream in("# comment\ngood\t2\nbad\t-3\nhuge\t7\nbroken\nGood\t3\n");
  const auto lex = senti::parse_strength_list(in, "t", diag);
  EXPECT_EQ(lex.term_strengths.size(), 2u);
  EXPECT_EQ(lex.term_strengths.at("good"), 3);
  EXPECT_EQ(diag.count(), 3u);
}

TEST(Lexicon, ModifierCollisionsSkipped) {
  Diagnostics diag;
  auto lex = demo();
  std::istringstream b("good\t1\nreally\t1\nzero\t0\n");
  senti::parse_boosters(lex, b, "b", diag);
  EXPECT_FALSE(lex.boosters.contains("good"));
  EXPECT_TRUE(lex.boosters.contains("really"));
  std::istringstream i("happy\nnor\n");
  senti::parse_inverters(lex, i, "i", diag);
  EXPECT_FALSE(lex.inverters.contains("happy"));
  EXPECT_TRUE(lex.inverters.contains("nor"));
  EXPECT_EQ(diag.count(), 3u);
  EXPECT_NO_THROW(lex.validate());
}

TEST(Lexicon, ValidateCatchesOverlap) {
  auto lex = demo();
  lex.boosters["happy"] = 1;
  EXPECT_THROW(lex.validate(), std::invalid_argument);
  auto lex2 = demo();
  lex2.term_strengths["meh"] = 1;
  EXPECT_THROW(lex2.validate(), std::invalid_argument);
}

TEST(Lexicon, MissingFileIsInputError) {
  Diagnostics diag;
  EXPECT_THROW(senti::load_strength_lexicon("/nonexistent/lex.tsv", diag), InputError);
}

TEST(Lexicon, WriteRoundTrip) {
  std::ostringstream out;
  senti::write_strength_list(out, demo());
  std::istringstream in(out.str());
  Diagnostics diag;
  EXPECT_EQ(senti::parse_strength_list(in, "rt", diag).term_strengths, demo().term_strengths);
}

TEST(SeedLexicon, MatchesBundledDataFiles) {
  EXPECT_EQ(senti::seed_strength_text(), read_file("data/lexicon/strengths.tsv"));
  EXPECT_EQ(senti::seed_booster_text(), read_file("data/lexicon/boosters.tsv"));
  EXPECT_EQ(senti::seed_inverter_text(), read_file("data/lexicon/inverters.txt"));
}

TEST(SeedLexicon, IsValid) {
  const auto lex = senti::seed_lexicon();
  EXPECT_NO_THROW(lex.validate());
  EXPECT_EQ(lex.term_strengths.at("happy"), 4);
  EXPECT_EQ(senti::score_text(lex, "not so happy"), (SentimentScore{1, -4}));
}

TEST(Optimizer, RaisesUnderweightTerm) {
  // "good" at 2 ties with "bad" at -2; raising it fixes the positive texts.
  senti::StrengthLexicon lex;
  lex.term_strengths = {{"good", 2}, {"bad", -2}};
  std::vector<senti::LabeledText> corpus;
  for (int i = 0; i < 4; ++i) corpus.push_back({"good but bad", Label::Positive});
  corpus.push_back({"bad", Label::Negative});
  const auto r = senti::optimize_strengths(lex, corpus);
  ASSERT_FALSE(r.log.empty());
  EXPECT_EQ(r.log.front().term, "good");
  EXPECT_EQ(r.log.size(), 1u);
  EXPECT_EQ(r.log.front().gain, 4);
  EXPECT_EQ(r.lexicon.term_strengths.at("good"), 3);
  EXPECT_EQ(r.passes, 2u);
  for (const auto& c : r.log) EXPECT_GE(c.gain, 2);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.correct_after, senti::count_correct(r.lexicon, corpus));
  EXPECT_GE(r.correct_after, r.correct_before);
}

TEST(Optimizer, SingleFixBelowMinGainIsRejected) {
  senti::StrengthLexicon lex;
  lex.term_strengths = {{"good", 2}, {"bad", -2}};
  const std::vector<senti::LabeledText> corpus{{"good but bad", Label::Positive}};
  const auto r = senti::optimize_strengths(lex, corpus);
  EXPECT_TRUE(r.log.empty());
  EXPECT_EQ(r.passes, 1u);
}

TEST(Optimizer, EmptyCorpusThrows) {
  EXPECT_THROW(senti::optimize_strengths(demo(), {}), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "altsent/lexgen.hpp"
#include "altsent/synthetic.hpp"
#include "lexgen_oracle.hpp"

using namespace altsent;
using senti::Label;

namespace {

std::vector<senti::LabeledText> tiny() {
  return {{"excellent paper", Label::Positive},
          {"excellent work!", Label::Positive},
          {"bad paper", Label::Negative},
          {"paper out", Label::Neutral}};
}

const lexgen::LexiconEntry& find(const lexgen::LexiconTable& t, std::string_view token) {
  for (const auto& e : t.entries) {
    if (e.counts.token == token) return e;
  }
  throw std::runtime_error("token not found");
}

void expect_matches_oracle(const std::vector<senti::LabeledText>& corpus) {
  Diagnostics diag;
  const auto table = lexgen::generate_lexicon(corpus, {}, diag);
  const auto want = oracle::compute(corpus);
  ASSERT_EQ(table.entries.size(), want.size());
  for (const auto& e : table.entries) {
    const auto& w = want.at(e.counts.token);
    EXPECT_EQ(e.counts.pos_freq, w.pos);
    EXPECT_EQ(e.counts.neg_freq, w.neg);
    EXPECT_EQ(e.counts.total_freq, w.total);
    EXPECT_NEAR(e.pr, w.pr, 1e-9);
    EXPECT_NEAR(e.nr, w.nr, 1e-9);
    EXPECT_NEAR(e.pf, w.pf, 1e-9);
    EXPECT_NEAR(e.nf, w.nf, 1e-9);
    EXPECT_NEAR(e.pr_cdf, w.pr_cdf, 1e-9);
    EXPECT_NEAR(e.pf_cdf, w.pf_cdf, 1e-9);
    EXPECT_NEAR(e.nr_cdf, w.nr_cdf, 1e-9);
    EXPECT_NEAR(e.nf_cdf, w.nf_cdf, 1e-9);
    EXPECT_NEAR(e.hmp, w.hmp, 1e-9);
    EXPECT_NEAR(e.hmn, w.hmn, 1e-9);
  }
}

}  // namespace

TEST(CountTokens, StripsSurroundingPunctuation) {
  EXPECT_EQ(lexgen::count_tokens("  great, (really) great!! -- ok."),
            (std::vector<std::string>{"great", "really", "great", "ok"}));
  EXPECT_EQ(lexgen::count_tokens("peer-reviewed 85(17),"),
            (std::vector<std::string>{"peer-reviewed", "85(17"}));
  EXPECT_TRUE(lexgen::count_tokens("").empty());
}

TEST(CountTerms, CountsOccurrencesPerLabel) {
  const auto counts = lexgen::count_terms(tiny());
  ASSERT_EQ(counts.size(), 5u);
  EXPECT_EQ(counts[0].token, "bad");
  const auto& paper = counts[3];
  EXPECT_EQ(paper.token, "paper");
  EXPECT_EQ(paper.pos_freq, 1u);
  EXPECT_EQ(paper.neg_freq, 1u);
  EXPECT_EQ(paper.neu_freq, 1u);
  EXPECT_EQ(paper.total_freq, 3u);
}

TEST(CountTerms, RepeatedTokenCountsEveryOccurrence) {
  const std::vector<senti::LabeledText> c{{"good good good", Label::Positive}};
  EXPECT_EQ(lexgen::count_terms(c)[0].pos_freq, 3u);
}

TEST(CountTerms, EmptyCorpusThrows) {
  EXPECT_THROW(lexgen::count_terms({}), std::invalid_argument);
}

TEST(Rates, PositiveOnlyToken) {
  const auto r = lexgen::compute_rates({"excellent", 4, 0, 0, 4});
  EXPECT_DOUBLE_EQ(r.pr, 1.0);
  EXPECT_DOUBLE_EQ(r.nr, 0.0);
}

TEST(Frequencies, EmptyClassGivesZero) {
  const auto f = lexgen::compute_frequencies({"x", 2, 0, 1, 3}, 8, 0);
  EXPECT_DOUBLE_EQ(f.pf, 0.25);
  EXPECT_DOUBLE_EQ(f.nf, 0.0);
}

TEST(EmpiricalCdf, CountsValuesAtOrBelow) {
  const lexgen::EmpiricalCdf f({0.5, 0.1, 0.5, 0.9});
  EXPECT_DOUBLE_EQ(f(0.0), 0.0);
  EXPECT_DOUBLE_EQ(f(0.1), 0.25);
  EXPECT_DOUBLE_EQ(f(0.5), 0.75);
  EXPECT_DOUBLE_EQ(f(1.0), 1.0);
  EXPECT_THROW(lexgen::EmpiricalCdf({}), std::invalid_argument);
}

TEST(HarmonicMean, WorkedValue) {
  EXPECT_NEAR(lexgen::harmonic_mean(0.83, 1.0), 0.907104, 1e-6);
  EXPECT_NEAR(lexgen::harmonic_scores(0.83, 1.0, 0, 0).hmp, 0.90710, 1e-4);
  EXPECT_DOUBLE_EQ(lexgen::harmonic_mean(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(lexgen::harmonic_mean(0.4, 0.4), 0.4);
}

TEST(GenerateLexicon, TinyCorpusByHand) {
  Diagnostics diag;
  const auto t = lexgen::generate_lexicon(tiny(), {}, diag);
  // tokens: bad excellent out paper work; sums pos 4, neg 2.
  const auto& ex = find(t, "excellent");
  EXPECT_DOUBLE_EQ(ex.pr, 1.0);
  EXPECT_DOUBLE_EQ(ex.pf, 0.5);
  EXPECT_DOUBLE_EQ(ex.pr_cdf, 1.0);  // PR values 0 1 0 1/3 1
  EXPECT_DOUBLE_EQ(ex.pf_cdf, 1.0);  // PF values 0 .5 0 .25 .25
  EXPECT_DOUBLE_EQ(ex.hmp, 1.0);
  const auto& paper = find(t, "paper");
  EXPECT_DOUBLE_EQ(paper.pr_cdf, 0.6);
  EXPECT_DOUBLE_EQ(paper.pf_cdf, 0.8);
  EXPECT_NEAR(paper.hmp, 2 * 0.6 * 0.8 / 1.4, 1e-12);
  EXPECT_EQ(t.entries.front().counts.token, "excellent");
  EXPECT_EQ(diag.count(), 0u);
}

TEST(GenerateLexicon, MatchesOracleOnSyntheticCorpus) {
  expect_matches_oracle(synthetic::labeled_texts(7, 200));
}

TEST(GenerateLexicon, MatchesOracleWithPunctuation) {
  expect_matches_oracle({{"wow!! great, great.", Label::Positive},
                         {"(sad) -- not great...", Label::Negative},
                         {"'quoted' words: here", Label::Neutral},
                         {"85(17), 2012.", Label::Positive}});
}

TEST(GenerateLexicon, NoNegativeClassWarns) {
  Diagnostics diag;
  const std::vector<senti::LabeledText> c{{"good day", Label::Positive}, {"a day", Label::Neutral}};
  const auto t = lexgen::generate_lexicon(c, {}, diag);
  EXPECT_EQ(diag.count(), 1u);
  for (const auto& e : t.entries) EXPECT_EQ(e.nf, 0.0);
}

TEST(GenerateLexicon, MinTotalFreqKeepsPreCutoffDenominators) {
  Diagnostics diag;
  lexgen::Options opt;
  opt.min_total_freq = 2;
  const auto t = lexgen::generate_lexicon(tiny(), opt, diag);
  ASSERT_EQ(t.entries.size(), 2u);  // excellent, paper
  EXPECT_DOUBLE_EQ(find(t, "excellent").pf, 0.5);
  const auto want = oracle::compute(tiny(), 2);
  EXPECT_NEAR(find(t, "paper").hmp, want.at("paper").hmp, 1e-12);
}

TEST(LexiconTable, SortOrder) {
  Diagnostics diag;
  const auto t = lexgen::generate_lexicon(synthetic::labeled_texts(3, 120), {}, diag);
  for (auto view : {lexgen::View::Positive, lexgen::View::Negative}) {
    const auto s = t.sorted(view);
    for (std::size_t i = 1; i < s.entries.size(); ++i) {
      const auto& a = s.entries[i - 1];
      const auto& b = s.entries[i];
      const double ka = view == lexgen::View::Positive ? a.hmp : a.hmn;
      const double kb = view == lexgen::View::Positive ? b.hmp : b.hmn;
      ASSERT_GE(ka, kb);
      if (ka == kb) {
        ASSERT_GE(a.counts.total_freq, b.counts.total_freq);
        if (a.counts.total_freq == b.counts.total_freq) ASSERT_LT(a.counts.token, b.counts.token);
      }
    }
  }
}

TEST(Export, StrengthsInBandAndSigned) {
  Diagnostics diag;
  const auto t = lexgen::generate_lexicon(synthetic::labeled_texts(11, 300), {}, diag);
  const auto lex = lexgen::export_strength_list(t, 20, {2, 5}, diag);
  EXPECT_FALSE(lex.term_strengths.empty());
  EXPECT_LE(lex.term_strengths.size(), 40u);
  for (const auto& [term, s] : lex.term_strengths) {
    EXPECT_GE(std::abs(s), 2) << term;
    EXPECT_LE(std::abs(s), 5) << term;
  }
  EXPECT_GT(lex.term_strengths.at("excellent"), 0);
  EXPECT_NO_THROW(lex.validate());
}

TEST(Export, TopTokenGetsBandMaximum) {
  Diagnostics diag;
  const auto t = lexgen::generate_lexicon(tiny(), {}, diag);
  const auto lex = lexgen::export_strength_list(t, 3, {2, 5}, diag);
  EXPECT_EQ(lex.term_strengths.at("excellent"), 5);
  EXPECT_LT(lex.term_strengths.at("bad"), 0);
}

TEST(Export, SingleTokenGetsMaximum) {
  Diagnostics diag;
  const auto t = lexgen::generate_lexicon(tiny(), {}, diag);
  const auto lex = lexgen::export_strength_list(t, 1, {3, 4}, diag);
  EXPECT_EQ(lex.term_strengths.at("excellent"), 4);
}

TEST(Export, RejectsBadArguments) {
  Diagnostics diag;
  const auto t = lexgen::generate_lexicon(tiny(), {}, diag);
  EXPECT_THROW(lexgen::export_strength_list(t, 0, {2, 5}, diag), std::invalid_argument);
  EXPECT_THROW(lexgen::export_strength_list(t, 5, {1, 5}, diag), std::invalid_argument);
  EXPECT_THROW(lexgen::export_strength_list(t, 5, {4, 3}, diag), std::invalid_argument);
}

TEST(Export, TieBetweenViewsIsDroppedWithWarning) {
  Diagnostics diag;
  const std::vector<senti::LabeledText> c{{"meh", Label::Positive}, {"meh", Label::Negative}};
  const auto t = lexgen::generate_lexicon(c, {}, diag);
  const auto lex = lexgen::export_strength_list(t, 5, {2, 5}, diag);
  EXPECT_TRUE(lex.term_strengths.empty());
  EXPECT_EQ(diag.count(), 1u);
}

TEST(Writers, TableAndTopListing) {
  Diagnostics diag;
  const auto t = lexgen::generate_lexicon(tiny(), {}, diag);
  std::ostringstream table, top;
  lexgen::write_table(table, t);
  lexgen::write_top_listing(top, t, lexgen::View::Positive, 2);
  EXPECT_EQ(table.str().substr(0, table.str().find('\n')),
            "token\tpos_freq\tneg_freq\ttotal_freq\tPR\tNR\tPF\tNF\tPR_cdf\tPF_cdf\tNR_cdf\tNF_cdf\tHMP\tHMN");
  EXPECT_EQ(top.str(),
            "rank\ttoken\ttotal_count\tpositive_hm\tnegative_hm\n"
            "1\texcellent\t2\t1.0000\t0.6000\n"
            "2\twork\t1\t0.8889\t0.6000\n");
}

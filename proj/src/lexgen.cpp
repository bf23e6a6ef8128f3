#include "altsent/lexgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include <fmt/format.h>

#include "altsent/text.hpp"

namespace altsent::lexgen {

namespace {

double ratio(std::uint64_t num, std::uint64_t den) noexcept {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double key_of(const LexiconEntry& e, View v) noexcept { return v == View::Positive ? e.hmp : e.hmn; }

}  // namespace

std::vector<std::string> count_tokens(std::string_view input) {
  std::vector<std::string> out;
  for (const auto& tok : text::split_ws(input)) {
    const auto core = text::strip_punct(tok);
    if (core.empty()) continue;
    out.emplace_back(core);
  }
  return out;
}

std::vector<TermCounts> count_terms(std::span<const senti::LabeledText> corpus) {
  if (corpus.empty()) throw std::invalid_argument("count_terms: empty corpus");
  std::unordered_map<std::string, TermCounts> table;
  for (const auto& doc : corpus) {
    for (auto& tok : count_tokens(doc.text)) {
      auto& c = table[tok];
      switch (doc.label) {
        case senti::Label::Positive:
          ++c.pos_freq;
          break;
        case senti::Label::Negative:
          ++c.neg_freq;
          break;
        case senti::Label::Neutral:
          ++c.neu_freq;
          break;
      }
      ++c.total_freq;
    }
  }
  std::vector<TermCounts> out;
  out.reserve(table.size());
  for (auto& [tok, c] : table) {
    c.token = tok;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const TermCounts& a, const TermCounts& b) { return a.token < b.token; });
  return out;
}

Rates compute_rates(const TermCounts& c) {
  if (c.total_freq == 0) throw std::invalid_argument("compute_rates: total_freq is 0");
  return {ratio(c.pos_freq, c.total_freq), ratio(c.neg_freq, c.total_freq)};
}

Frequencies compute_frequencies(const TermCounts& c, std::uint64_t sum_pos, std::uint64_t sum_neg) {
  return {ratio(c.pos_freq, sum_pos), ratio(c.neg_freq, sum_neg)};
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> values) : sorted_(std::move(values)) {
  if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: no values");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const noexcept {
  const auto at_or_below = std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
  return static_cast<double>(at_or_below) / static_cast<double>(sorted_.size());
}

double harmonic_mean(double a, double b) noexcept {
  const double sum = a + b;
  if (sum == 0.0) return 0.0;
  return LexiconEntry::n_metrics * a * b / sum;
}

HarmonicScores harmonic_scores(double pr_cdf, double pf_cdf, double nr_cdf, double nf_cdf) noexcept {
  return {harmonic_mean(pr_cdf, pf_cdf), harmonic_mean(nr_cdf, nf_cdf)};
}

LexiconTable LexiconTable::sorted(View v) const {
  LexiconTable out = *this;
  out.view = v;
  std::sort(out.entries.begin(), out.entries.end(), [v](const LexiconEntry& a, const LexiconEntry& b) {
    const double ka = key_of(a, v);
    const double kb = key_of(b, v);
    if (ka != kb) return ka > kb;
    if (a.counts.total_freq != b.counts.total_freq) return a.counts.total_freq > b.counts.total_freq;
    return a.counts.token < b.counts.token;
  });
  return out;
}

LexiconTable generate_lexicon(std::span<const senti::LabeledText> corpus, const Options& options,
                              Diagnostics& diag) {
  auto counts = count_terms(corpus);

  LexiconTable table;
  table.sizes.texts = corpus.size();
  for (const auto& c : counts) {
    table.sizes.sum_pos += c.pos_freq;
    table.sizes.sum_neg += c.neg_freq;
    table.sizes.sum_neu += c.neu_freq;
  }
  if (table.sizes.sum_pos == 0) diag.warn("corpus has no positive tokens; PF is 0 for every token");
  if (table.sizes.sum_neg == 0) diag.warn("corpus has no negative tokens; NF is 0 for every token");

  std::erase_if(counts, [&](const TermCounts& c) { return c.total_freq < options.min_total_freq; });
  if (counts.empty()) {
    throw std::invalid_argument("generate_lexicon: no token reaches min_total_freq");
  }

  table.entries.reserve(counts.size());
  std::vector<double> prs, nrs, pfs, nfs;
  for (auto& c : counts) {
    LexiconEntry e;
    const auto r = compute_rates(c);
    const auto f = compute_frequencies(c, table.sizes.sum_pos, table.sizes.sum_neg);
    e.pr = r.pr;
    e.nr = r.nr;
    e.pf = f.pf;
    e.nf = f.nf;
    e.counts = std::move(c);
    prs.push_back(e.pr);
    nrs.push_back(e.nr);
    pfs.push_back(e.pf);
    nfs.push_back(e.nf);
    table.entries.push_back(std::move(e));
  }

  const EmpiricalCdf pr_cdf(std::move(prs));
  const EmpiricalCdf pf_cdf(std::move(pfs));
  const EmpiricalCdf nr_cdf(std::move(nrs));
  const EmpiricalCdf nf_cdf(std::move(nfs));
  for (auto& e : table.entries) {
    e.pr_cdf = pr_cdf(e.pr);
    e.pf_cdf = pf_cdf(e.pf);
    e.nr_cdf = nr_cdf(e.nr);
    e.nf_cdf = nf_cdf(e.nf);
    const auto hm = harmonic_scores(e.pr_cdf, e.pf_cdf, e.nr_cdf, e.nf_cdf);
    e.hmp = hm.hmp;
    e.hmn = hm.hmn;
  }
  return table.sorted(View::Positive);
}

senti::StrengthLexicon export_strength_list(const LexiconTable& table, std::size_t top_k,
                                            StrengthBand band, Diagnostics& diag) {
  if (table.entries.empty()) throw std::invalid_argument("export_strength_list: empty table");
  if (top_k < 1) throw std::invalid_argument("export_strength_list: top_k must be >= 1");
  if (band.min_strength < senti::kMinStrength || band.max_strength > senti::kMaxStrength ||
      band.min_strength > band.max_strength) {
    throw std::invalid_argument("export_strength_list: band must lie within 2..5");
  }

  // token -> (strength magnitude, score) for one view's exported set.
  auto bin_view = [&](View v) {
    const auto view = table.sorted(v);
    const auto k = std::min(top_k, view.entries.size());
    std::vector<double> keys;
    keys.reserve(k);
    for (std::size_t i = 0; i < k; ++i) keys.push_back(key_of(view.entries[i], v));
    std::sort(keys.begin(), keys.end());
    const int span = band.max_strength - band.min_strength + 1;

    std::map<std::string, std::pair<int, double>> out;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& e = view.entries[i];
      const double key = key_of(e, v);
      const auto below = std::lower_bound(keys.begin(), keys.end(), key) - keys.begin();
      const double q = k == 1 ? 1.0 : static_cast<double>(below) / static_cast<double>(k - 1);
      const int m = std::min(band.min_strength + static_cast<int>(std::floor(q * span)),
                             band.max_strength);
      out.emplace(e.counts.token, std::make_pair(m, key));
    }
    return out;
  };

  const auto positives = bin_view(View::Positive);
  const auto negatives = bin_view(View::Negative);

  senti::StrengthLexicon lex;
  for (const auto& [token, pos] : positives) {
    const auto neg = negatives.find(token);
    if (neg == negatives.end() || pos.second > neg->second.second) {
      lex.term_strengths[token] = pos.first;
    } else if (pos.second == neg->second.second) {
      diag.warn(fmt::format("token '{}' has HMP == HMN ({}); excluded from export", token,
                            pos.second));
    }
  }
  for (const auto& [token, neg] : negatives) {
    const auto pos = positives.find(token);
    if (pos == positives.end() || neg.second > pos->second.second) {
      lex.term_strengths[token] = -neg.first;
    }
  }
  return lex;
}

void write_table(std::ostream& out, const LexiconTable& table) {
  out << "token\tpos_freq\tneg_freq\ttotal_freq\tPR\tNR\tPF\tNF\tPR_cdf\tPF_cdf\tNR_cdf\tNF_cdf\t"
         "HMP\tHMN\n";
  for (const auto& e : table.entries) {
    out << fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", e.counts.token,
                       e.counts.pos_freq, e.counts.neg_freq, e.counts.total_freq, e.pr, e.nr, e.pf,
                       e.nf, e.pr_cdf, e.pf_cdf, e.nr_cdf, e.nf_cdf, e.hmp, e.hmn);
  }
}

void write_top_listing(std::ostream& out, const LexiconTable& table, View view, std::size_t top_k) {
  const auto sorted = table.sorted(view);
  out << "rank\ttoken\ttotal_count\tpositive_hm\tnegative_hm\n";
  const auto k = std::min(top_k, sorted.entries.size());
  for (std::size_t i = 0; i < k; ++i) {
    const auto& e = sorted.entries[i];
    out << fmt::format("{}\t{}\t{}\t{:.4f}\t{:.4f}\n", i + 1, e.counts.token, e.counts.total_freq,
                       e.hmp, e.hmn);
  }
}

}  // namespace altsent::lexgen

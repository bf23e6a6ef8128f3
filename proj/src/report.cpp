#include "altsent/report.hpp"

#include <fmt/format.h>
#include <json.hpp>

namespace altsent::report {

namespace {

std::string domains_field(const DomainSet& domains) {
  std::string out;
  for (auto d : domains) {
    if (!out.empty()) out += ';';
    out += discipline_code(d);
  }
  return out;
}

}  // namespace

void write_clean_tweets(std::ostream& out, std::span<const CleanTweet> tweets) {
  for (const auto& t : tweets) {
    if (!t.kept()) continue;
    nlohmann::json j;
    j["altmetric_id"] = t.altmetric_id;
    j["tweet_id"] = t.tweet_id;
    j["text"] = t.text;
    if (t.posted_at) j["posted_at"] = *t.posted_at;
    if (t.label) j["label"] = *t.label;
    out << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
  }
}

void write_drop_stats(std::ostream& out, const DropStats& s) {
  out << "reason\tcount\n";
  out << fmt::format("records\t{}\nmalformed\t{}\nnon_english\t{}\nduplicate\t{}\nempty\t{}\n"
                     "kept\t{}\n",
                     s.records, s.malformed, s.non_english, s.duplicate, s.empty, s.kept);
}

void write_article_sentiment(std::ostream& out, std::span<const summarize::ScoredArticle> articles) {
  out << "# score = mean over tweets of (positive + negative + 4) / 8\n";
  out << "altmetric_id\ttweet_count\tscore\tlabel\tavg_pos\tavg_neg\tcitation_count\tdomains\n";
  for (const auto& a : articles) {
    out << fmt::format("{}\t{}\t{:.6f}\t{}\t{:.6f}\t{:.6f}\t{}\t{}\n", a.sentiment.altmetric_id,
                       a.sentiment.tweet_count, a.sentiment.score,
                       senti::label_name(a.sentiment.label), a.avg_pos, a.avg_neg,
                       a.citation_count, domains_field(a.domains));
  }
}

void write_domain_summary(std::ostream& out, std::span<const summarize::DomainSummary> rows) {
  out << "# avg_pos = mean article positive/5; avg_neg = mean article |negative|/5\n";
  out << "domain\tdoc_count\tavg_pos\tavg_neg\n";
  for (const auto& r : rows) {
    out << fmt::format("{}\t{}\t{:.4f}\t{:.4f}\n", discipline_name(r.domain), r.doc_count,
                       r.avg_pos, r.avg_neg);
  }
}

void write_normal_fits(std::ostream& out, std::span<const summarize::DomainSummary> rows) {
  out << "# normal fit of article scores: sample mean and (n-1) standard deviation\n";
  out << "domain\tdoc_count\tmu\tsigma\n";
  for (const auto& r : rows) {
    out << fmt::format("{}\t{}\t{:.6f}\t{:.6f}\n", discipline_name(r.domain), r.doc_count,
                       r.normal_fit.mu, r.normal_fit.sigma);
  }
}

void write_histogram(std::ostream& out, std::span<const summarize::HistogramBin> bins) {
  out << "domain\tbin_lower\tbin_upper\tcount\n";
  for (const auto& b : bins) {
    out << fmt::format("{}\t{:.2f}\t{:.2f}\t{}\n", discipline_name(b.domain), b.lower, b.upper,
                       b.count);
  }
}

void write_distribution(std::ostream& out, const summarize::Distribution* overall,
                        const std::map<int, summarize::Distribution>& by_year) {
  out << "year\tn\tpct_pos\tpct_neg\tpct_neu\n";
  if (overall) {
    out << fmt::format("all\t{}\t{:.2f}\t{:.2f}\t{:.2f}\n", overall->total, overall->pct_pos,
                       overall->pct_neg, overall->pct_neu);
  }
  for (const auto& [year, d] : by_year) {
    out << fmt::format("{}\t{}\t{:.2f}\t{:.2f}\t{:.2f}\n", year, d.total, d.pct_pos, d.pct_neg,
                       d.pct_neu);
  }
}

void write_correlation(std::ostream& out, std::span<const summarize::BinCorrelation> rows,
                       summarize::CorrelationMethod method) {
  out << fmt::format("# method={}\n",
                     method == summarize::CorrelationMethod::Spearman ? "spearman" : "pearson");
  out << "threshold\tn\tcoefficient\n";
  for (const auto& r : rows) {
    out << fmt::format("{:.2f}\t{}\t{}\n", r.threshold, r.n,
                       r.coefficient ? fmt::format("{:.6f}", *r.coefficient) : "undefined");
  }
}

void write_aspects(std::ostream& out, std::span<const aspects::AspectRow> rows, aspects::Mode mode) {
  out << fmt::format("# aspect_mode={}\n", aspects::mode_name(mode));
  out << "domain\tdoc_count\ttitle\tabstract\tmethodology\tresults_conclusion\tothers\n";
  for (const auto& r : rows) {
    out << fmt::format("{}\t{}\t{:.2f}\t{:.2f}\t{:.2f}\t{:.2f}\t{:.2f}\n", discipline_name(r.domain),
                       r.doc_count, r.pct[0], r.pct[1], r.pct[2], r.pct[3], r.pct[4]);
  }
}

}  // namespace altsent::report

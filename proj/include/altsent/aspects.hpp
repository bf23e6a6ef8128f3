#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altsent/corpus.hpp"
#include "altsent/diagnostics.hpp"

namespace altsent::aspects {

enum class Aspect { Title, Abstract, Methodology, ResultsConclusion, Other };

inline constexpr std::size_t kAspectCount = 5;

std::string_view aspect_name(Aspect a) noexcept;
std::optional<Aspect> parse_aspect(std::string_view s) noexcept;

enum class Mode { DoubleCount, Exclusive };

std::string_view mode_name(Mode m) noexcept;
std::optional<Mode> parse_mode(std::string_view s) noexcept;

/// Keywords per article section. A token matches a keyword when the
/// keyword is a case-insensitive prefix of it (keyword "method" matches "methods").
class KeywordTable {
 public:
  /// Title: title, subject, topic. Abstract: abstract, overview, summary.
  /// Methodology: method, material, calculation, procedure, tool, approach,
  /// model, technique, experiment. Results & conclusion: result, evaluation,
  /// conclusion, value, discussing, showing, finding.
  static KeywordTable defaults();

  /// Lines of "aspect TAB keyword,keyword,...". Aspects not listed keep no keywords.
  static KeywordTable load(const std::filesystem::path& path, Diagnostics& diag);

  void add(Aspect a, std::string keyword);
  const std::vector<std::string>& keywords(Aspect a) const;
  bool empty() const noexcept;

  /// Aspects whose keywords prefix `token` (already lowercased).
  std::vector<Aspect> match_token(std::string_view token) const;

 private:
  std::array<std::vector<std::string>, kAspectCount - 1> keywords_;
};

/// One (entity, aspect, holder, time) opinion record.
struct AspectOpinion {
  std::string entity;  // altmetric_id
  Aspect aspect = Aspect::Other;
  std::string holder;  // tweet_id
  std::optional<std::string> time;
};

/// Aspects a single tweet addresses, in aspect order (double-count) or the
/// one with the earliest match (exclusive). Never empty: no match gives Other.
std::vector<Aspect> tweet_aspects(std::string_view text, const KeywordTable& keywords, Mode mode);

std::vector<AspectOpinion> extract_opinions(const ArticleDoc& doc, const KeywordTable& keywords,
                                            Mode mode);

struct AspectProfile {
  std::string altmetric_id;
  std::array<std::size_t, kAspectCount> counts{};
  std::size_t tweet_count = 0;
  DomainSet domains;

  std::size_t count(Aspect a) const noexcept { return counts[static_cast<std::size_t>(a)]; }
};

AspectProfile match_aspects(const ArticleDoc& doc, const KeywordTable& keywords, Mode mode);

struct AspectRow {
  Discipline domain{};
  std::size_t doc_count = 0;
  std::array<double, kAspectCount> pct{};  // indexed by Aspect
};

/// Per domain, each aspect's share of all tweets of the domain's articles,
/// in percent. Exclusive rows are rounded to hundredths summing to 100.
/// Rows are ordered by doc_count descending, then by domain.
std::vector<AspectRow> domain_aspect_table(std::span<const AspectProfile> profiles, Mode mode);

}  // namespace altsent::aspects

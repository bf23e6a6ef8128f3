#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altsent/diagnostics.hpp"

namespace altsent {

/// The 16 merged disciplines used to group articles by research field.
enum class Discipline : std::uint8_t {
  AgriculturalBiologicalVeterinary,
  BiochemistryGeneticsMolecularBiology,
  Chemistry,
  ComputerScience,
  EarthPlanetarySciences,
  Engineering,
  EnvironmentalScience,
  EconomicsBusinessDecisionSciences,
  General,
  MaterialScience,
  HealthProfessionsNursing,
  Mathematics,
  Medicine,
  PhysicsAstronomy,
  SocialSciences,
  OtherLifeHealthSciences,
};

inline constexpr std::size_t kDisciplineCount = 16;

using DomainSet = std::set<Discipline>;

/// Short stable code, e.g. "medicine".
std::string_view discipline_code(Discipline d) noexcept;
/// Human-readable name, e.g. "Medicine & Medical Sciences".
std::string_view discipline_name(Discipline d) noexcept;
std::span<const Discipline> all_disciplines() noexcept;

/// Maps free-form domain labels onto the closed vocabulary.
///
/// Lookup is case-insensitive and ignores punctuation and spacing; '&' and
/// "and" are interchangeable. Codes, display names and the spellings used
/// in published domain tables are built in. More aliases can be loaded from
/// a file with one "alias TAB code" pair per line.
class DomainVocabulary {
 public:
  DomainVocabulary();

  std::optional<Discipline> parse(std::string_view label) const;
  void add_alias(std::string_view alias, Discipline d);
  void load_aliases(const std::filesystem::path& path, Diagnostics& diag);

 private:
  std::map<std::string, Discipline> aliases_;
};

struct Tweet {
  std::string altmetric_id;
  std::string tweet_id;
  std::string text;
  std::optional<std::string> posted_at;  // ISO-8601, UTC
  std::optional<std::string> label;      // gold sentiment label, when annotated
};

enum class DropReason : std::uint8_t { NonEnglish, Duplicate, Empty };

std::string_view drop_reason_name(DropReason r) noexcept;

/// Normalized tweet text. `dropped` is set when the tweet is excluded.
struct CleanTweet {
  std::string altmetric_id;
  std::string tweet_id;
  std::string text;
  std::optional<std::string> posted_at;
  std::optional<std::string> label;
  std::optional<DropReason> dropped;

  bool kept() const noexcept { return !dropped.has_value(); }
};

struct ArticleMeta {
  std::string altmetric_id;
  std::string title;
  std::uint64_t citation_count = 0;
  DomainSet domain_codes;
};

using ArticleMap = std::map<std::string, ArticleMeta, std::less<>>;

struct ArticleDoc {
  std::string altmetric_id;
  std::vector<CleanTweet> tweets;
  DomainSet domain_codes;
  std::uint64_t citation_count = 0;
  std::size_t tweet_count = 0;
};

/// Parses one JSON Lines record. Returns nullopt (with a reason) when the
/// record is malformed.
std::optional<Tweet> parse_tweet_record(std::string_view line, std::string* reason = nullptr);

/// Reads a tweet file record by record. Blank lines are ignored; malformed
/// records are skipped and counted.
class TweetReader {
 public:
  explicit TweetReader(const std::filesystem::path& path);

  std::optional<Tweet> next(Diagnostics& diag);

  std::size_t records() const noexcept { return records_; }
  std::size_t yielded() const noexcept { return yielded_; }
  std::size_t skipped() const noexcept { return skipped_; }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  std::size_t line_no_ = 0;
  std::size_t records_ = 0;
  std::size_t yielded_ = 0;
  std::size_t skipped_ = 0;
};

struct TweetBatch {
  std::vector<Tweet> tweets;
  std::size_t records = 0;
  std::size_t skipped = 0;
};

/// Throws InputError when the file cannot be opened.
TweetBatch load_tweets(const std::filesystem::path& path, Diagnostics& diag);

/// Loads the article metadata table (TSV with header row). Rows with unknown
/// domain labels, bad counts or a wrong column count are rejected with a
/// warning; later duplicates overwrite earlier ones.
ArticleMap load_articles(const std::filesystem::path& path, const DomainVocabulary& vocab,
                         Diagnostics& diag);

struct JoinResult {
  std::vector<ArticleDoc> docs;  // sorted by altmetric_id
  std::size_t discarded_articles = 0;
  std::size_t articles_without_meta = 0;
};

/// Groups kept tweets by article and keeps articles with at least
/// `min_tweets` tweets. Tweets keep their input order inside each article.
JoinResult join(std::span<const CleanTweet> tweets, const ArticleMap& meta, std::size_t min_tweets,
                Diagnostics& diag);

/// Raised by a citation source on a transient failure; callers may retry.
class CitationSourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CitationSource {
 public:
  virtual ~CitationSource() = default;
  /// Returns counts for the ids it knows; unknown ids are absent from the map.
  virtual std::map<std::string, std::uint64_t> lookup(std::span<const std::string> ids) = 0;
};

/// Citation counts from a TSV file of "altmetric_id TAB count" rows, or from
/// an already loaded article table.
class FileCitationSource final : public CitationSource {
 public:
  explicit FileCitationSource(std::filesystem::path path);
  explicit FileCitationSource(const ArticleMap& articles);

  std::map<std::string, std::uint64_t> lookup(std::span<const std::string> ids) override;

 private:
  void ensure_loaded();

  std::filesystem::path path_;
  bool loaded_ = false;
  std::map<std::string, std::uint64_t, std::less<>> counts_;
};

std::map<std::string, std::uint64_t> fetch_citations(CitationSource& client,
                                                     std::span<const std::string> ids);

}  // namespace altsent

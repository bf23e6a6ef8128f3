#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "altsent/corpus.hpp"
#include "altsent/diagnostics.hpp"

namespace altsent::preprocess {

/// Apostrophe contractions and their two-word expansions.
class ContractionTable {
 public:
  /// The built-in table: don't, won't, can't, didn't, doesn't, wouldn't,
  /// isn't, aren't, wasn't, weren't, haven't, hasn't, couldn't, shouldn't.
  static ContractionTable defaults();

  /// One "contraction TAB expansion" pair per line; '#' lines are comments.
  static ContractionTable load(const std::filesystem::path& path, Diagnostics& diag);

  void set(std::string contraction, std::string expansion);
  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, std::string> entries_;  // lowercase, ASCII apostrophe
};

struct Config {
  double english_threshold = 0.15;
  std::size_t title_min_token_len = 4;
  ContractionTable contractions = ContractionTable::defaults();
};

/// English function words used by the language check and title matching.
const std::unordered_set<std::string>& stopwords();

bool is_english(std::string_view text, double threshold = 0.15);

std::string expand_negations(std::string_view text,
                             const ContractionTable& table = ContractionTable::defaults());

/// Deletes tokens of at least `min_len` characters that also occur in the
/// title (case-insensitive, punctuation ignored) and are not stopwords.
/// Punctuation attached to a deleted token is kept on the previous token.
std::string remove_title_terms(std::string_view text, std::string_view title,
                               std::size_t min_len = 4);

/// Decodes named and numeric character references and strips HTML tags.
std::string decode_html(std::string_view text);
std::string strip_mentions(std::string_view text);
std::string strip_urls(std::string_view text);

/// Entity decoding, mention/URL/replacement-character/'#' removal, negation
/// expansion, whitespace collapsing and lowercasing. No tweet is dropped here.
std::string normalize(std::string_view raw, const Config& config = {});

CleanTweet clean_tweet(const Tweet& raw, std::optional<std::string_view> title = std::nullopt,
                       const Config& config = {});

/// Order-stable duplicate filter keyed on (altmetric_id, text).
class Deduper {
 public:
  /// Marks `t` as a duplicate when its key was seen before. Already dropped
  /// tweets are ignored. Returns whether the tweet is still kept.
  bool admit(CleanTweet& t);

 private:
  std::set<std::pair<std::string, std::string>> seen_;
};

/// Marks every repeat of an (altmetric_id, text) pair after its first
/// occurrence as dropped(duplicate).
void dedupe(std::span<CleanTweet> tweets);

}  // namespace altsent::preprocess

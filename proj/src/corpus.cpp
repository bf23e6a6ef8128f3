#include "altsent/corpus.hpp"

#include <array>
#include <charconv>
#include <cctype>

#include <fmt/format.h>
#include <json.hpp>

namespace altsent {

namespace {

struct DisciplineInfo {
  Discipline id;
  std::string_view code;
  std::string_view name;
};

constexpr std::array<DisciplineInfo, kDisciplineCount> kDisciplines{{
    {Discipline::AgriculturalBiologicalVeterinary, "agri_bio_vet",
     "Agricultural, Biological Sciences & Veterinary"},
    {Discipline::BiochemistryGeneticsMolecularBiology, "biochem_genetics",
     "Biochemistry, Genetics & Molecular Biology"},
    {Discipline::Chemistry, "chemistry", "Chemistry"},
    {Discipline::ComputerScience, "computer_science", "Computer Science"},
    {Discipline::EarthPlanetarySciences, "earth_planetary", "Earth & Planetary Sciences"},
    {Discipline::Engineering, "engineering", "Engineering"},
    {Discipline::EnvironmentalScience, "environmental", "Environmental Science"},
    {Discipline::EconomicsBusinessDecisionSciences, "economics_business",
     "Economics, Business & Decision Sciences"},
    {Discipline::General, "general", "General"},
    {Discipline::MaterialScience, "materials", "Material Science"},
    {Discipline::HealthProfessionsNursing, "health_nursing", "Health Professions & Nursing"},
    {Discipline::Mathematics, "mathematics", "Mathematics"},
    {Discipline::Medicine, "medicine", "Medicine & Medical Sciences"},
    {Discipline::PhysicsAstronomy, "physics_astronomy", "Physics & Astronomy"},
    {Discipline::SocialSciences, "social_sciences", "Social Sciences"},
    {Discipline::OtherLifeHealthSciences, "other_life_health", "Other Life & Health Sciences"},
}};

constexpr std::array<Discipline, kDisciplineCount> kDisciplineOrder = [] {
  std::array<Discipline, kDisciplineCount> out{};
  for (std::size_t i = 0; i < kDisciplineCount; ++i) out[i] = kDisciplines[i].id;
  return out;
}();

// Collapses a label to lowercase alphanumerics, with '&' read as "and".
std::string alias_key(std::string_view label) {
  std::string out;
  for (char c : label) {
    const auto u = static_cast<unsigned char>(c);
    if (c == '&') {
      out += "and";
    } else if (std::isalnum(u)) {
      out += static_cast<char>(std::tolower(u));
    }
  }
  return out;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> parse_count(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

std::optional<std::string> id_field(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_unsigned() || it->is_number_integer()) return it->dump();
  return std::nullopt;
}

}  // namespace

std::string_view discipline_code(Discipline d) noexcept {
  return kDisciplines[static_cast<std::size_t>(d)].code;
}

std::string_view discipline_name(Discipline d) noexcept {
  return kDisciplines[static_cast<std::size_t>(d)].name;
}

std::span<const Discipline> all_disciplines() noexcept { return kDisciplineOrder; }

std::string_view drop_reason_name(DropReason r) noexcept {
  switch (r) {
    case DropReason::NonEnglish:
      return "non_english";
    case DropReason::Duplicate:
      return "duplicate";
    case DropReason::Empty:
      return "empty";
  }
  return "unknown";
}

DomainVocabulary::DomainVocabulary() {
  for (const auto& info : kDisciplines) {
    add_alias(info.code, info.id);
    add_alias(info.name, info.id);
  }
  // Spellings used in the published domain tables.
  add_alias("Agricultural, Biological Science & Veterinary",
            Discipline::AgriculturalBiologicalVeterinary);
  add_alias("Earth Planetary Sciences", Discipline::EarthPlanetarySciences);
  add_alias("Environmental Sciences", Discipline::EnvironmentalScience);
  add_alias("Materials Sciences", Discipline::MaterialScience);
  add_alias("Materials Science", Discipline::MaterialScience);
  add_alias("Medicine", Discipline::Medicine);
  add_alias("Other Life and Health Sciences", Discipline::OtherLifeHealthSciences);
  add_alias("Computer Sciences", Discipline::ComputerScience);
  add_alias("General (Science, Nature, PNAS)", Discipline::General);
}

std::optional<Discipline> DomainVocabulary::parse(std::string_view label) const {
  const auto it = aliases_.find(alias_key(label));
  if (it == aliases_.end()) return std::nullopt;
  return it->second;
}

void DomainVocabulary::add_alias(std::string_view alias, Discipline d) {
  aliases_[alias_key(alias)] = d;
}

void DomainVocabulary::load_aliases(const std::filesystem::path& path, Diagnostics& diag) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open domain alias file {}", path.string()));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_on(body, '\t');
    if (fields.size() != 2) {
      diag.warn(fmt::format("{}:{}: expected 'alias<TAB>code'", path.string(), line_no));
      continue;
    }
    const auto target = parse(trim(fields[1]));
    if (!target) {
      diag.warn(fmt::format("{}:{}: unknown domain code '{}'", path.string(), line_no,
                            trim(fields[1])));
      continue;
    }
    add_alias(trim(fields[0]), *target);
  }
}

std::optional<Tweet> parse_tweet_record(std::string_view line, std::string* reason) {
  auto fail = [&](const char* why) -> std::optional<Tweet> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return fail("not a JSON object");

  Tweet t;
  auto aid = id_field(j, "altmetric_id");
  auto tid = id_field(j, "tweet_id");
  if (!aid || aid->empty()) return fail("missing altmetric_id");
  if (!tid || tid->empty()) return fail("missing tweet_id");
  t.altmetric_id = std::move(*aid);
  t.tweet_id = std::move(*tid);

  const auto text = j.find("text");
  if (text == j.end() || text->is_null()) {
    t.text.clear();
  } else if (text->is_string()) {
    t.text = text->get<std::string>();
  } else {
    return fail("text is not a string");
  }

  const auto posted = j.find("posted_at");
  if (posted != j.end() && !posted->is_null()) {
    if (!posted->is_string()) return fail("posted_at is not a string");
    t.posted_at = posted->get<std::string>();
  }

  const auto label = j.find("label");
  if (label != j.end() && !label->is_null()) {
    if (!label->is_string()) return fail("label is not a string");
    t.label = label->get<std::string>();
  }
  return t;
}

TweetReader::TweetReader(const std::filesystem::path& path) : path_(path), in_(path) {
  if (!in_) throw InputError(fmt::format("cannot open tweet file {}", path.string()));
}

std::optional<Tweet> TweetReader::next(Diagnostics& diag) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (trim(line).empty()) continue;
    ++records_;
    std::string reason;
    if (auto t = parse_tweet_record(line, &reason)) {
      ++yielded_;
      return t;
    }
    ++skipped_;
    diag.warn(fmt::format("{}:{}: skipped record ({})", path_.string(), line_no_, reason));
  }
  return std::nullopt;
}

TweetBatch load_tweets(const std::filesystem::path& path, Diagnostics& diag) {
  TweetReader reader(path);
  TweetBatch batch;
  while (auto t = reader.next(diag)) batch.tweets.push_back(std::move(*t));
  batch.records = reader.records();
  batch.skipped = reader.skipped();
  return batch;
}

ArticleMap load_articles(const std::filesystem::path& path, const DomainVocabulary& vocab,
                         Diagnostics& diag) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open article file {}", path.string()));

  std::string line;
  if (!std::getline(in, line)) throw InputError(fmt::format("{}: empty file", path.string()));
  const auto header = split_on(trim(line), '\t');
  if (header.empty() || trim(header[0]) != "altmetric_id") {
    throw InputError(fmt::format("{}: missing header row (altmetric_id, title, citation_count, "
                                 "domains)",
                                 path.string()));
  }

  ArticleMap out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split_on(line, '\t');
    if (fields.size() < 3 || fields.size() > 4) {
      diag.warn(fmt::format("{}:{}: expected 4 tab-separated fields, got {}", path.string(),
                            line_no, fields.size()));
      continue;
    }
    ArticleMeta meta;
    meta.altmetric_id = std::string(trim(fields[0]));
    meta.title = std::string(trim(fields[1]));
    if (meta.altmetric_id.empty()) {
      diag.warn(fmt::format("{}:{}: empty altmetric_id", path.string(), line_no));
      continue;
    }
    const auto citations = parse_count(fields[2]);
    if (!citations) {
      diag.warn(fmt::format("{}:{}: invalid citation_count '{}'", path.string(), line_no,
                            fields[2]));
      continue;
    }
    meta.citation_count = *citations;

    bool rejected = false;
    if (fields.size() == 4) {
      for (auto label : split_on(fields[3], ';')) {
        label = trim(label);
        if (label.empty()) continue;
        const auto d = vocab.parse(label);
        if (!d) {
          diag.warn(fmt::format("{}:{}: unknown domain '{}', record rejected", path.string(),
                                line_no, label));
          rejected = true;
          break;
        }
        meta.domain_codes.insert(*d);
      }
    }
    if (rejected) continue;

    if (out.contains(meta.altmetric_id)) {
      diag.warn(fmt::format("{}:{}: duplicate altmetric_id '{}' overwrites earlier row",
                            path.string(), line_no, meta.altmetric_id));
    }
    out.insert_or_assign(meta.altmetric_id, std::move(meta));
  }
  return out;
}

JoinResult join(std::span<const CleanTweet> tweets, const ArticleMap& meta, std::size_t min_tweets,
                Diagnostics& diag) {
  if (min_tweets < 1) throw ConfigError("min_tweets", "must be at least 1");

  std::map<std::string_view, std::vector<const CleanTweet*>> groups;
  for (const auto& t : tweets) {
    if (t.kept()) groups[t.altmetric_id].push_back(&t);
  }

  JoinResult result;
  for (const auto& [id, members] : groups) {
    if (members.size() < min_tweets) {
      ++result.discarded_articles;
      continue;
    }
    ArticleDoc doc;
    doc.altmetric_id = std::string(id);
    doc.tweets.reserve(members.size());
    for (const auto* t : members) doc.tweets.push_back(*t);
    doc.tweet_count = doc.tweets.size();
    if (const auto it = meta.find(id); it != meta.end()) {
      doc.domain_codes = it->second.domain_codes;
      doc.citation_count = it->second.citation_count;
    } else {
      ++result.articles_without_meta;
      diag.warn(fmt::format("article '{}' has no metadata; using no domains and 0 citations", id));
    }
    result.docs.push_back(std::move(doc));
  }
  return result;
}

FileCitationSource::FileCitationSource(std::filesystem::path path) : path_(std::move(path)) {}

FileCitationSource::FileCitationSource(const ArticleMap& articles) : loaded_(true) {
  for (const auto& [id, meta] : articles) counts_.emplace(id, meta.citation_count);
}

void FileCitationSource::ensure_loaded() {
  if (loaded_) return;
  std::ifstream in(path_);
  if (!in) throw CitationSourceError(fmt::format("cannot open citation file {}", path_.string()));
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_on(body, '\t');
    if (fields.size() != 2) continue;
    if (const auto n = parse_count(fields[1])) counts_[std::string(trim(fields[0]))] = *n;
  }
  loaded_ = true;
}

std::map<std::string, std::uint64_t> FileCitationSource::lookup(std::span<const std::string> ids) {
  std::map<std::string, std::uint64_t> out;
  if (ids.empty()) return out;
  ensure_loaded();
  for (const auto& id : ids) {
    if (const auto it = counts_.find(id); it != counts_.end()) out.emplace(id, it->second);
  }
  return out;
}

std::map<std::string, std::uint64_t> fetch_citations(CitationSource& client,
                                                     std::span<const std::string> ids) {
  return client.lookup(ids);
}

}  // namespace altsent

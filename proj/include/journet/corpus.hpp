#pragma once

// Journal metadata store: papers, authors, affiliations, PACS assignments and
// reference lists, with the inverted indexes the network layers are built
// from.  A Corpus is immutable once constructed.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace journet {

using AuthorId = std::int64_t;
using AffiliationId = std::int64_t;
using PaperId = std::string;

struct TimeIndex {
  std::uint32_t volume = 0;
  std::uint32_t issue = 0;

  auto operator<=>(const TimeIndex&) const = default;
};

/// Parses "vVnI" (e.g. "v4n2").  Throws Error{Usage} on malformed input.
TimeIndex parse_time_index(std::string_view token);
std::string format_time_index(const TimeIndex& t);

struct PaperIdParts {
  std::uint32_t volume;
  std::uint32_t issue;
  std::uint32_t seq;
};

/// Canonical paper ids are "v{volume}n{issue}p{seq}" with positive, unpadded
/// decimal numbers.  Returns nullopt for anything else.
std::optional<PaperIdParts> parse_paper_id(std::string_view id);

/// Two digits, dot, two digits, dot, two non-space characters ("05.50.+q").
bool is_valid_pacs(std::string_view code);

/// Trim, collapse internal whitespace runs to one space, ASCII case-fold.
std::string normalize_reference_key(std::string_view raw);

struct ReferenceKey {
  std::string key;
  std::optional<PaperId> internal_paper_id;

  bool operator==(const ReferenceKey&) const = default;
};

struct PaperRecord {
  PaperId paper_id;
  std::string title;
  std::uint32_t volume = 0;
  std::uint32_t issue = 0;
  std::optional<std::int32_t> year;
  std::vector<AuthorId> author_ids;
  std::set<std::string> pacs_codes;
  std::vector<ReferenceKey> reference_keys;

  TimeIndex time() const { return {volume, issue}; }
  bool operator==(const PaperRecord&) const = default;
};

struct AuthorRecord {
  AuthorId author_id = 0;
  std::string name;
  std::set<AffiliationId> affiliation_ids;

  bool operator==(const AuthorRecord&) const = default;
};

struct AffiliationRecord {
  AffiliationId affiliation_id = 0;
  std::string name;
  std::optional<std::string> country;

  bool operator==(const AffiliationRecord&) const = default;
};

struct CorpusIndexes {
  std::map<AuthorId, std::vector<PaperId>> papers_by_author;
  std::map<std::string, std::vector<PaperId>> papers_by_pacs;
  std::map<std::string, std::vector<PaperId>> citing_papers_by_reference;

  bool operator==(const CorpusIndexes&) const = default;
};

/// Builds the inverted indexes from scratch.  Index value lists are sorted.
CorpusIndexes build_indexes(const std::map<PaperId, PaperRecord>& papers);

class Corpus {
 public:
  Corpus() = default;

  /// Stores the records as given and derives the indexes.  No validation is
  /// performed here; see validate_corpus.
  Corpus(std::map<PaperId, PaperRecord> papers,
         std::map<AuthorId, AuthorRecord> authors,
         std::map<AffiliationId, AffiliationRecord> affiliations);

  const std::map<PaperId, PaperRecord>& papers() const { return papers_; }
  const std::map<AuthorId, AuthorRecord>& authors() const { return authors_; }
  const std::map<AffiliationId, AffiliationRecord>& affiliations() const {
    return affiliations_;
  }
  const CorpusIndexes& indexes() const { return indexes_; }

  const PaperRecord* find_paper(std::string_view id) const;
  const AuthorRecord* find_author(AuthorId id) const;

  /// Distinct (volume, issue) pairs present, ascending.
  std::vector<TimeIndex> time_indexes() const;

  bool empty() const { return papers_.empty() && authors_.empty(); }

  bool operator==(const Corpus&) const = default;

 private:
  std::map<PaperId, PaperRecord> papers_;
  std::map<AuthorId, AuthorRecord> authors_;
  std::map<AffiliationId, AffiliationRecord> affiliations_;
  CorpusIndexes indexes_;
};

struct Violation {
  // One of: bad-paper-id, volume-mismatch, empty-authors, duplicate-author,
  // invalid-pacs, empty-reference-key, unnormalized-reference-key,
  // duplicate-reference, self-citation,
  // inconsistent-reference, dangling-author, dangling-affiliation,
  // dangling-paper, index-mismatch, key-mismatch.
  std::string kind;
  std::string subject;
  std::string detail;

  auto operator<=>(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(std::string_view kind) const;
};

/// Read-only check of every record and index invariant.  Violations are
/// reported in a deterministic (sorted) order.
ValidationReport validate_corpus(const Corpus& corpus);

struct CorpusFiles {
  std::filesystem::path papers;
  std::filesystem::path authors;
  std::filesystem::path authorship;
  std::filesystem::path references;
  std::optional<std::filesystem::path> affiliations;
};

/// Reads the CSV file set.  Any malformed row, duplicate id or dangling id
/// raises Error{Data} naming file and line; no partial corpus is returned.
Corpus ingest_corpus(const CorpusFiles& files);

/// Papers with time <= as_of, plus the authors and affiliations they reach
/// and references restricted to the kept papers.
Corpus snapshot(const Corpus& corpus, const TimeIndex& as_of);

inline constexpr std::string_view kCorpusFormatHeader = "journet-corpus v1";

std::string serialize_corpus(const Corpus& corpus);
Corpus deserialize_corpus(std::string_view text);

void persist_corpus(const Corpus& corpus, const std::filesystem::path& path);
Corpus load_corpus(const std::filesystem::path& path);

}  // namespace journet

#include "journet/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <unordered_map>

#include "csv.hpp"
#include "journet/error.hpp"

namespace journet {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Unsigned decimal without sign or leading zeros.
template <typename T>
std::optional<T> parse_canonical_uint(std::string_view s) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return std::nullopt;
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

template <typename T>
std::optional<T> parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void sort_unique(std::vector<PaperId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

TimeIndex parse_time_index(std::string_view token) {
  auto bad = [&] {
    return Error(ErrorKind::Usage,
                 "invalid time index '" + std::string(token) + "' (expected vVnI, e.g. v4n2)");
  };
  if (!token.starts_with('v')) throw bad();
  auto n = token.find('n');
  if (n == std::string_view::npos) throw bad();
  auto vol = parse_int<std::uint32_t>(token.substr(1, n - 1));
  auto iss = parse_int<std::uint32_t>(token.substr(n + 1));
  if (!vol || !iss || token.substr(1, n - 1).find_first_not_of("0123456789") != std::string_view::npos ||
      token.substr(n + 1).find_first_not_of("0123456789") != std::string_view::npos)
    throw bad();
  return {*vol, *iss};
}

std::string format_time_index(const TimeIndex& t) {
  return "v" + std::to_string(t.volume) + "n" + std::to_string(t.issue);
}

std::optional<PaperIdParts> parse_paper_id(std::string_view id) {
  if (!id.starts_with('v')) return std::nullopt;
  auto n = id.find('n');
  auto p = id.find('p');
  if (n == std::string_view::npos || p == std::string_view::npos || p < n) return std::nullopt;
  auto vol = parse_canonical_uint<std::uint32_t>(id.substr(1, n - 1));
  auto iss = parse_canonical_uint<std::uint32_t>(id.substr(n + 1, p - n - 1));
  auto seq = parse_canonical_uint<std::uint32_t>(id.substr(p + 1));
  if (!vol || !iss || !seq || *vol == 0 || *iss == 0 || *seq == 0) return std::nullopt;
  return PaperIdParts{*vol, *iss, *seq};
}

bool is_valid_pacs(std::string_view code) {
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  auto tail = [](char c) { return c > ' ' && c <= '~' && c != ',' && c != ';'; };
  return code.size() == 8 && digit(code[0]) && digit(code[1]) && code[2] == '.' &&
         digit(code[3]) && digit(code[4]) && code[5] == '.' && tail(code[6]) && tail(code[7]);
}

std::string normalize_reference_key(std::string_view raw) {
  std::string out;
  bool pending_space = false;
  for (char c : trim(raw)) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

CorpusIndexes build_indexes(const std::map<PaperId, PaperRecord>& papers) {
  CorpusIndexes idx;
  for (const auto& [id, paper] : papers) {
    for (AuthorId a : paper.author_ids) idx.papers_by_author[a].push_back(id);
    for (const auto& code : paper.pacs_codes) idx.papers_by_pacs[code].push_back(id);
    for (const auto& ref : paper.reference_keys)
      idx.citing_papers_by_reference[ref.key].push_back(id);
  }
  for (auto& [_, v] : idx.papers_by_author) sort_unique(v);
  for (auto& [_, v] : idx.papers_by_pacs) sort_unique(v);
  for (auto& [_, v] : idx.citing_papers_by_reference) sort_unique(v);
  return idx;
}

Corpus::Corpus(std::map<PaperId, PaperRecord> papers, std::map<AuthorId, AuthorRecord> authors,
               std::map<AffiliationId, AffiliationRecord> affiliations)
    : papers_(std::move(papers)),
      authors_(std::move(authors)),
      affiliations_(std::move(affiliations)),
      indexes_(build_indexes(papers_)) {}

const PaperRecord* Corpus::find_paper(std::string_view id) const {
  auto it = papers_.find(std::string(id));
  return it == papers_.end() ? nullptr : &it->second;
}

const AuthorRecord* Corpus::find_author(AuthorId id) const {
  auto it = authors_.find(id);
  return it == authors_.end() ? nullptr : &it->second;
}

std::vector<TimeIndex> Corpus::time_indexes() const {
  std::set<TimeIndex> times;
  for (const auto& [_, p] : papers_) times.insert(p.time());
  return {times.begin(), times.end()};
}

std::size_t ValidationReport::count(std::string_view kind) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; }));
}

ValidationReport validate_corpus(const Corpus& corpus) {
  ValidationReport report;
  auto add = [&](std::string kind, std::string subject, std::string detail) {
    report.violations.push_back({std::move(kind), std::move(subject), std::move(detail)});
  };

  std::map<std::string, std::optional<PaperId>> internal_by_key;
  std::set<std::string> inconsistent_keys;

  for (const auto& [key, p] : corpus.papers()) {
    if (key != p.paper_id) add("key-mismatch", key, "record carries id " + p.paper_id);
    auto parts = parse_paper_id(p.paper_id);
    if (!parts) {
      add("bad-paper-id", p.paper_id, "not of the form v{volume}n{issue}p{seq}");
    } else if (parts->volume != p.volume || parts->issue != p.issue) {
      add("volume-mismatch", p.paper_id,
          "record volume/issue " + std::to_string(p.volume) + "/" + std::to_string(p.issue));
    }
    if (p.author_ids.empty()) add("empty-authors", p.paper_id, "no authors");
    std::set<AuthorId> seen;
    for (AuthorId a : p.author_ids) {
      if (!seen.insert(a).second) add("duplicate-author", p.paper_id, std::to_string(a));
      if (!corpus.find_author(a)) add("dangling-author", p.paper_id, std::to_string(a));
    }
    for (const auto& code : p.pacs_codes)
      if (!is_valid_pacs(code)) add("invalid-pacs", p.paper_id, code);

    std::set<std::string> keys;
    for (const auto& ref : p.reference_keys) {
      if (ref.key.empty()) add("empty-reference-key", p.paper_id, "");
      else if (ref.key != normalize_reference_key(ref.key))
        add("unnormalized-reference-key", p.paper_id, ref.key);
      if (!keys.insert(ref.key).second) add("duplicate-reference", p.paper_id, ref.key);
      if (ref.internal_paper_id) {
        if (*ref.internal_paper_id == p.paper_id)
          add("self-citation", p.paper_id, ref.key);
        else if (!corpus.find_paper(*ref.internal_paper_id))
          add("dangling-paper", p.paper_id, *ref.internal_paper_id);
      }
      auto [it, inserted] = internal_by_key.emplace(ref.key, ref.internal_paper_id);
      if (!inserted && it->second != ref.internal_paper_id) inconsistent_keys.insert(ref.key);
    }
  }
  for (const auto& key : inconsistent_keys)
    add("inconsistent-reference", key, "cited with differing internal paper ids");

  for (const auto& [key, a] : corpus.authors()) {
    if (key != a.author_id)
      add("key-mismatch", std::to_string(key), "record carries id " + std::to_string(a.author_id));
    for (AffiliationId f : a.affiliation_ids)
      if (!corpus.affiliations().contains(f))
        add("dangling-affiliation", std::to_string(a.author_id), std::to_string(f));
  }
  for (const auto& [key, f] : corpus.affiliations()) {
    if (key != f.affiliation_id)
      add("key-mismatch", std::to_string(key),
          "record carries id " + std::to_string(f.affiliation_id));
  }

  if (build_indexes(corpus.papers()) != corpus.indexes())
    add("index-mismatch", "", "derived indexes differ from a rebuild");

  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

namespace {

class Table {
 public:
  Table(const std::filesystem::path& path, std::vector<std::string> required)
      : source_(path.string()) {
    records_ = detail::parse_csv(detail::read_file(source_), source_);
    if (records_.empty()) fail(1, "missing header row");
    const auto& header = records_.front().fields;
    for (const auto& name : required) {
      auto it = std::find_if(header.begin(), header.end(),
                             [&](const std::string& h) { return trim(h) == name; });
      if (it == header.end()) fail(1, "header lacks column '" + name + "'");
      columns_[name] = static_cast<std::size_t>(it - header.begin());
    }
    width_ = header.size();
  }

  std::size_t rows() const { return records_.size() - 1; }
  std::size_t line(std::size_t row) const { return records_[row + 1].line; }

  std::string_view get(std::size_t row, const std::string& column) const {
    const auto& rec = records_[row + 1];
    if (rec.fields.size() != width_)
      fail(rec.line, "expected " + std::to_string(width_) + " fields, found " +
                         std::to_string(rec.fields.size()));
    return trim(rec.fields[columns_.at(column)]);
  }

  [[noreturn]] void fail(std::size_t line, const std::string& what) const {
    throw Error(ErrorKind::Data, source_ + ":" + std::to_string(line) + ": " + what);
  }

 private:
  std::string source_;
  std::vector<detail::CsvRecord> records_;
  std::unordered_map<std::string, std::size_t> columns_;
  std::size_t width_ = 0;
};

template <typename T>
T require_int(const Table& t, std::size_t row, const std::string& column) {
  auto v = parse_int<T>(t.get(row, column));
  if (!v) t.fail(t.line(row), "invalid " + column + " '" + std::string(t.get(row, column)) + "'");
  return *v;
}

}  // namespace

Corpus ingest_corpus(const CorpusFiles& files) {
  std::map<AffiliationId, AffiliationRecord> affiliations;
  if (files.affiliations && std::filesystem::exists(*files.affiliations)) {
    Table t(*files.affiliations, {"affiliation_id", "name", "country"});
    for (std::size_t r = 0; r < t.rows(); ++r) {
      AffiliationRecord rec;
      rec.affiliation_id = require_int<AffiliationId>(t, r, "affiliation_id");
      rec.name = t.get(r, "name");
      if (auto c = t.get(r, "country"); !c.empty()) rec.country = std::string(c);
      if (!affiliations.emplace(rec.affiliation_id, rec).second)
        t.fail(t.line(r), "duplicate affiliation_id " + std::to_string(rec.affiliation_id));
    }
  }

  std::map<AuthorId, AuthorRecord> authors;
  {
    Table t(files.authors, {"author_id", "name", "affiliation_ids"});
    for (std::size_t r = 0; r < t.rows(); ++r) {
      AuthorRecord rec;
      rec.author_id = require_int<AuthorId>(t, r, "author_id");
      if (rec.author_id < 0) t.fail(t.line(r), "negative author_id");
      rec.name = t.get(r, "name");
      if (auto list = t.get(r, "affiliation_ids"); !list.empty()) {
        for (auto part : split(list, ';')) {
          auto id = parse_int<AffiliationId>(part);
          if (!id) t.fail(t.line(r), "invalid affiliation id '" + std::string(part) + "'");
          if (!affiliations.contains(*id))
            t.fail(t.line(r), "dangling affiliation_id " + std::to_string(*id));
          rec.affiliation_ids.insert(*id);
        }
      }
      if (!authors.emplace(rec.author_id, rec).second)
        t.fail(t.line(r), "duplicate author_id " + std::to_string(rec.author_id));
    }
  }

  std::map<PaperId, PaperRecord> papers;
  std::map<PaperId, std::size_t> paper_lines;
  {
    Table t(files.papers, {"paper_id", "title", "volume", "issue", "year", "pacs"});
    for (std::size_t r = 0; r < t.rows(); ++r) {
      PaperRecord rec;
      rec.paper_id = t.get(r, "paper_id");
      auto parts = parse_paper_id(rec.paper_id);
      if (!parts) t.fail(t.line(r), "paper_id '" + rec.paper_id + "' is not of the form vVnIpS");
      rec.title = t.get(r, "title");
      rec.volume = require_int<std::uint32_t>(t, r, "volume");
      rec.issue = require_int<std::uint32_t>(t, r, "issue");
      if (rec.volume != parts->volume || rec.issue != parts->issue)
        t.fail(t.line(r), "volume/issue disagree with paper_id " + rec.paper_id);
      if (auto y = t.get(r, "year"); !y.empty()) rec.year = require_int<std::int32_t>(t, r, "year");
      if (auto list = t.get(r, "pacs"); !list.empty()) {
        for (auto part : split(list, ';')) {
          auto code = trim(part);
          if (!is_valid_pacs(code)) t.fail(t.line(r), "invalid PACS code '" + std::string(code) + "'");
          rec.pacs_codes.emplace(code);
        }
      }
      paper_lines[rec.paper_id] = t.line(r);
      if (!papers.emplace(rec.paper_id, rec).second)
        t.fail(t.line(r), "duplicate paper_id " + rec.paper_id);
    }
  }

  {
    Table t(files.authorship, {"paper_id", "author_id", "position"});
    std::map<PaperId, std::map<std::int64_t, AuthorId>> by_position;
    std::set<std::pair<PaperId, AuthorId>> seen;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      PaperId pid(t.get(r, "paper_id"));
      auto aid = require_int<AuthorId>(t, r, "author_id");
      auto pos = require_int<std::int64_t>(t, r, "position");
      if (!papers.contains(pid)) t.fail(t.line(r), "dangling paper_id " + pid);
      if (!authors.contains(aid)) t.fail(t.line(r), "dangling author_id " + std::to_string(aid));
      if (pos < 1) t.fail(t.line(r), "position must be >= 1");
      if (!seen.emplace(pid, aid).second)
        t.fail(t.line(r), "duplicate authorship " + pid + "/" + std::to_string(aid));
      if (!by_position[pid].emplace(pos, aid).second)
        t.fail(t.line(r), "duplicate position " + std::to_string(pos) + " on " + pid);
    }
    for (auto& [pid, rec] : papers) {
      auto it = by_position.find(pid);
      if (it == by_position.end())
        throw Error(ErrorKind::Data, files.papers.string() + ":" +
                                         std::to_string(paper_lines[pid]) + ": paper " + pid +
                                         " has no authorship rows");
      for (const auto& [_, aid] : it->second) rec.author_ids.push_back(aid);
    }
  }

  {
    Table t(files.references, {"citing_paper_id", "ref_key", "internal_paper_id"});
    std::map<std::string, std::optional<PaperId>> internal_by_key;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      PaperId citing(t.get(r, "citing_paper_id"));
      auto it = papers.find(citing);
      if (it == papers.end()) t.fail(t.line(r), "dangling citing_paper_id " + citing);
      ReferenceKey ref;
      ref.key = normalize_reference_key(t.get(r, "ref_key"));
      if (ref.key.empty()) t.fail(t.line(r), "empty ref_key");
      if (auto internal = t.get(r, "internal_paper_id"); !internal.empty()) {
        if (!papers.contains(std::string(internal)))
          t.fail(t.line(r), "dangling internal_paper_id " + std::string(internal));
        if (internal == citing) t.fail(t.line(r), "paper " + citing + " cites itself");
        ref.internal_paper_id = std::string(internal);
      }
      auto [known, inserted] = internal_by_key.emplace(ref.key, ref.internal_paper_id);
      if (!inserted && known->second != ref.internal_paper_id)
        t.fail(t.line(r), "ref_key '" + ref.key + "' mapped to differing internal_paper_id");
      auto& refs = it->second.reference_keys;
      if (std::any_of(refs.begin(), refs.end(),
                      [&](const ReferenceKey& k) { return k.key == ref.key; }))
        t.fail(t.line(r), "duplicate reference '" + ref.key + "' in " + citing);
      refs.push_back(std::move(ref));
    }
    // Canonical order keeps ingestion independent of row order.
    for (auto& [_, p] : papers)
      std::sort(p.reference_keys.begin(), p.reference_keys.end(),
                [](const ReferenceKey& a, const ReferenceKey& b) { return a.key < b.key; });
  }

  Corpus corpus(std::move(papers), std::move(authors), std::move(affiliations));
  auto report = validate_corpus(corpus);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorKind::Data, "corpus invalid: " + v.kind + " " + v.subject + " " + v.detail);
  }
  return corpus;
}

Corpus snapshot(const Corpus& corpus, const TimeIndex& as_of) {
  std::map<PaperId, PaperRecord> papers;
  for (const auto& [id, p] : corpus.papers())
    if (p.time() <= as_of) papers.emplace(id, p);

  std::map<AuthorId, AuthorRecord> authors;
  std::map<AffiliationId, AffiliationRecord> affiliations;
  for (auto& [_, p] : papers) {
    for (auto& ref : p.reference_keys)
      if (ref.internal_paper_id && !papers.contains(*ref.internal_paper_id))
        ref.internal_paper_id.reset();
    for (AuthorId a : p.author_ids) {
      if (const auto* rec = corpus.find_author(a)) {
        authors.emplace(a, *rec);
        for (AffiliationId f : rec->affiliation_ids)
          if (auto it = corpus.affiliations().find(f); it != corpus.affiliations().end())
            affiliations.emplace(f, it->second);
      }
    }
  }
  return Corpus(std::move(papers), std::move(authors), std::move(affiliations));
}

}  // namespace journet

#include <fstream>

#include "csv.hpp"
#include "journet/corpus.hpp"
#include "journet/error.hpp"
#include "json.hpp"

// Layout: the header line, then one JSON document holding the primary
// records.  Indexes are rebuilt on load.

namespace journet {

using nlohmann::json;

namespace {

json to_json(const Corpus& corpus) {
  json affiliations = json::array();
  for (const auto& [_, f] : corpus.affiliations()) {
    affiliations.push_back({{"id", f.affiliation_id},
                            {"name", f.name},
                            {"country", f.country ? json(*f.country) : json(nullptr)}});
  }
  json authors = json::array();
  for (const auto& [_, a] : corpus.authors()) {
    authors.push_back({{"id", a.author_id}, {"name", a.name}, {"affiliations", a.affiliation_ids}});
  }
  json papers = json::array();
  for (const auto& [_, p] : corpus.papers()) {
    json refs = json::array();
    for (const auto& r : p.reference_keys) {
      refs.push_back({{"key", r.key},
                      {"internal", r.internal_paper_id ? json(*r.internal_paper_id) : json(nullptr)}});
    }
    papers.push_back({{"id", p.paper_id},
                      {"title", p.title},
                      {"volume", p.volume},
                      {"issue", p.issue},
                      {"year", p.year ? json(*p.year) : json(nullptr)},
                      {"authors", p.author_ids},
                      {"pacs", p.pacs_codes},
                      {"references", refs}});
  }
  return {{"affiliations", affiliations}, {"authors", authors}, {"papers", papers}};
}

Corpus from_json(const json& doc) {
  std::map<AffiliationId, AffiliationRecord> affiliations;
  for (const auto& f : doc.at("affiliations")) {
    AffiliationRecord rec;
    rec.affiliation_id = f.at("id").get<AffiliationId>();
    rec.name = f.at("name").get<std::string>();
    if (!f.at("country").is_null()) rec.country = f.at("country").get<std::string>();
    if (!affiliations.emplace(rec.affiliation_id, rec).second)
      throw Error(ErrorKind::Data, "duplicate affiliation " + std::to_string(rec.affiliation_id));
  }
  std::map<AuthorId, AuthorRecord> authors;
  for (const auto& a : doc.at("authors")) {
    AuthorRecord rec;
    rec.author_id = a.at("id").get<AuthorId>();
    rec.name = a.at("name").get<std::string>();
    rec.affiliation_ids = a.at("affiliations").get<std::set<AffiliationId>>();
    if (!authors.emplace(rec.author_id, rec).second)
      throw Error(ErrorKind::Data, "duplicate author " + std::to_string(rec.author_id));
  }
  std::map<PaperId, PaperRecord> papers;
  for (const auto& p : doc.at("papers")) {
    PaperRecord rec;
    rec.paper_id = p.at("id").get<std::string>();
    rec.title = p.at("title").get<std::string>();
    rec.volume = p.at("volume").get<std::uint32_t>();
    rec.issue = p.at("issue").get<std::uint32_t>();
    if (!p.at("year").is_null()) rec.year = p.at("year").get<std::int32_t>();
    rec.author_ids = p.at("authors").get<std::vector<AuthorId>>();
    rec.pacs_codes = p.at("pacs").get<std::set<std::string>>();
    for (const auto& r : p.at("references")) {
      ReferenceKey ref;
      ref.key = r.at("key").get<std::string>();
      if (!r.at("internal").is_null()) ref.internal_paper_id = r.at("internal").get<std::string>();
      rec.reference_keys.push_back(std::move(ref));
    }
    if (!papers.emplace(rec.paper_id, rec).second)
      throw Error(ErrorKind::Data, "duplicate paper " + rec.paper_id);
  }
  return Corpus(std::move(papers), std::move(authors), std::move(affiliations));
}

}  // namespace

std::string serialize_corpus(const Corpus& corpus) {
  std::string out(kCorpusFormatHeader);
  out += '\n';
  out += to_json(corpus).dump(1);
  out += '\n';
  return out;
}

Corpus deserialize_corpus(std::string_view text) {
  auto eol = text.find('\n');
  std::string_view header = text.substr(0, eol);
  if (header.ends_with('\r')) header.remove_suffix(1);
  if (header != kCorpusFormatHeader) {
    constexpr std::string_view magic = "journet-corpus ";
    std::string found = header.starts_with(magic) ? std::string(header.substr(magic.size()))
                                                  : "'" + std::string(header.substr(0, 40)) + "'";
    throw Error(ErrorKind::Format, "unsupported corpus format: expected version v1, found " + found);
  }
  Corpus corpus;
  try {
    corpus = from_json(json::parse(eol == std::string_view::npos ? std::string_view{}
                                                                 : text.substr(eol + 1)));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, std::string("corrupt corpus file (format v1): ") + e.what());
  }
  auto report = validate_corpus(corpus);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorKind::Data, "corpus file invalid: " + v.kind + " " + v.subject + " " + v.detail);
  }
  return corpus;
}

void persist_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << serialize_corpus(corpus);
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

Corpus load_corpus(const std::filesystem::path& path) {
  return deserialize_corpus(detail::read_file(path.string()));
}

}  // namespace journet

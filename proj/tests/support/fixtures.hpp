#pragma once

// Test scaffolding: corpus descriptions that can be written as the CSV file
// set, plus random corpus generators.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

#include "journet/corpus.hpp"

namespace fixtures {

namespace fs = std::filesystem;

struct PaperSpec {
  std::string id;
  std::vector<std::int64_t> authors;
  std::vector<std::string> pacs;
  // (ref key, internal paper id or "")
  std::vector<std::pair<std::string, std::string>> refs;
  std::string title = "";
};

struct CorpusSpec {
  std::vector<PaperSpec> papers;
  // Authors not listed here but used by papers get a generated name.
  std::map<std::int64_t, std::string> author_names;
  std::map<std::int64_t, std::set<std::int64_t>> author_affiliations;
  std::map<std::int64_t, std::string> affiliations;
};

inline std::set<std::int64_t> all_authors(const CorpusSpec& spec) {
  std::set<std::int64_t> ids;
  for (const auto& p : spec.papers) ids.insert(p.authors.begin(), p.authors.end());
  for (const auto& [id, _] : spec.author_names) ids.insert(id);
  return ids;
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("journet-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline void write_lines(const fs::path& path, const std::string& header,
                        std::vector<std::string> rows, std::mt19937_64* shuffle) {
  if (shuffle) std::shuffle(rows.begin(), rows.end(), *shuffle);
  std::ofstream out(path, std::ios::binary);
  out << header << "\n";
  for (const auto& r : rows) out << r << "\n";
}

/// Writes papers.csv, authors.csv, authorship.csv, references.csv and
/// affiliations.csv.  With `shuffle` the data rows are permuted.
inline journet::CorpusFiles write_csv(const CorpusSpec& spec, const fs::path& dir,
                                      std::mt19937_64* shuffle = nullptr) {
  std::vector<std::string> papers, authors, authorship, refs, affils;
  for (const auto& p : spec.papers) {
    auto parts = journet::parse_paper_id(p.id);
    std::string pacs;
    for (const auto& c : p.pacs) pacs += (pacs.empty() ? "" : ";") + c;
    papers.push_back(p.id + "," + csv_quote(p.title.empty() ? "Paper " + p.id : p.title) + "," +
                     std::to_string(parts ? parts->volume : 0) + "," +
                     std::to_string(parts ? parts->issue : 0) + ",," + pacs);
    for (std::size_t i = 0; i < p.authors.size(); ++i)
      authorship.push_back(p.id + "," + std::to_string(p.authors[i]) + "," + std::to_string(i + 1));
    for (const auto& [key, internal] : p.refs)
      refs.push_back(p.id + "," + csv_quote(key) + "," + internal);
  }
  for (auto id : all_authors(spec)) {
    auto it = spec.author_names.find(id);
    std::string name = it == spec.author_names.end() ? "Author " + std::to_string(id) : it->second;
    std::string affs;
    if (auto a = spec.author_affiliations.find(id); a != spec.author_affiliations.end())
      for (auto f : a->second) affs += (affs.empty() ? "" : ";") + std::to_string(f);
    authors.push_back(std::to_string(id) + "," + csv_quote(name) + "," + affs);
  }
  for (const auto& [id, name] : spec.affiliations)
    affils.push_back(std::to_string(id) + "," + csv_quote(name) + ",Ukraine");

  journet::CorpusFiles files{dir / "papers.csv", dir / "authors.csv", dir / "authorship.csv",
                             dir / "references.csv", dir / "affiliations.csv"};
  write_lines(files.papers, "paper_id,title,volume,issue,year,pacs", papers, shuffle);
  write_lines(files.authors, "author_id,name,affiliation_ids", authors, shuffle);
  write_lines(files.authorship, "paper_id,author_id,position", authorship, shuffle);
  write_lines(files.references, "citing_paper_id,ref_key,internal_paper_id", refs, shuffle);
  write_lines(*files.affiliations, "affiliation_id,name,country", affils, shuffle);
  return files;
}

inline journet::Corpus ingest(const CorpusSpec& spec) {
  TempDir dir;
  return journet::ingest_corpus(write_csv(spec, dir.path()));
}

/// Author 3672 co-authors a single paper with 3671, 3673 and 3674; author 100
/// has three papers with one distinct co-author each.
inline CorpusSpec table_one() {
  CorpusSpec s;
  s.papers = {
      {"v1n1p1", {3671, 3672, 3673, 3674}, {"05.50.+q"}, {}},
      {"v1n1p2", {100, 10446}, {"75.10.Jm"}, {}},
      {"v1n2p1", {100, 4385}, {"75.10.Jm"}, {}},
      {"v1n2p2", {100, 4368}, {}, {}},
  };
  return s;
}

/// v4n2p17 shares an author with v4n4p14, is cited by it and shares a PACS
/// code with it.  Distractors each carry fewer relations.
inline CorpusSpec related_papers() {
  CorpusSpec s;
  s.papers = {
      {"v4n1p3", {11, 12}, {"64.60.Ak"}, {{"external work a", ""}}},
      {"v4n2p17", {10, 13}, {"05.50.+q"}, {{"external work a", ""}}},
      {"v4n3p5", {14}, {"05.50.+q", "75.10.Hk"}, {{"external work b", ""}}},
      {"v4n4p14",
       {10, 11},
       {"05.50.+q", "75.10.Hk"},
       {{"Author A. cited work", "v4n2p17"}, {"external work b", ""}}},
      {"v5n1p2", {15}, {"64.60.Ak"}, {{"journal paper v4n4p14", "v4n4p14"}}},
  };
  return s;
}

struct RandomCorpusOptions {
  int papers = 20;
  int authors = 15;
  int pacs = 6;
  int external_refs = 12;
  int volumes = 3;
  int issues = 2;
  double internal_ref_prob = 0.3;
};

inline CorpusSpec random_corpus(std::uint64_t seed, RandomCorpusOptions opt = {}) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::bernoulli_distribution coin(opt.internal_ref_prob);
  CorpusSpec s;
  std::vector<std::string> codes;
  for (int i = 0; i < opt.pacs; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d.%02d.%c%c", 5 + i % 70, 10 + i, 'A' + i % 26, 'q');
    codes.emplace_back(buf);
  }
  std::map<std::pair<int, int>, int> seq;
  for (int i = 0; i < opt.papers; ++i) {
    int v = uniform(1, opt.volumes), n = uniform(1, opt.issues);
    PaperSpec p;
    p.id = "v" + std::to_string(v) + "n" + std::to_string(n) + "p" + std::to_string(++seq[{v, n}]);
    std::set<std::int64_t> authors;
    const int na = uniform(1, 4);
    while (static_cast<int>(authors.size()) < na) authors.insert(uniform(1, opt.authors));
    p.authors.assign(authors.begin(), authors.end());
    std::shuffle(p.authors.begin(), p.authors.end(), rng);
    std::set<std::string> pacs;
    for (int k = uniform(0, 3); k > 0; --k) pacs.insert(codes[uniform(0, opt.pacs - 1)]);
    p.pacs.assign(pacs.begin(), pacs.end());
    std::set<std::string> keys;
    for (int k = uniform(0, 5); k > 0; --k) {
      std::string key = "Ref Work " + std::to_string(uniform(1, opt.external_refs));
      if (keys.insert(journet::normalize_reference_key(key)).second) p.refs.emplace_back(key, "");
    }
    s.papers.push_back(std::move(p));
  }
  // Internal citations between distinct papers, keyed by the cited id.
  for (auto& p : s.papers) {
    for (const auto& q : s.papers) {
      if (q.id == p.id || !coin(rng) || !coin(rng)) continue;
      p.refs.emplace_back("journal " + q.id, q.id);
    }
  }
  return s;
}

/// Authorship with preferential attachment: each author slot of a new paper
/// is a newcomer with probability `p_new`, otherwise an existing author drawn
/// proportionally to their current paper count.
inline CorpusSpec preferential_corpus(std::uint64_t seed, int papers, double p_new) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution newcomer(p_new);
  std::vector<std::int64_t> slots;  // one entry per (author, paper) incidence
  std::int64_t next_author = 1;
  CorpusSpec s;
  std::map<std::pair<int, int>, int> seq;
  for (int i = 0; i < papers; ++i) {
    int v = 1 + i * 5 / papers, n = 1 + (i % 4);
    PaperSpec p;
    p.id = "v" + std::to_string(v) + "n" + std::to_string(n) + "p" + std::to_string(++seq[{v, n}]);
    const int na = std::uniform_int_distribution<int>(1, 4)(rng);
    std::set<std::int64_t> chosen;
    for (int k = 0; k < na; ++k) {
      std::int64_t a;
      if (slots.empty() || newcomer(rng)) {
        a = next_author++;
      } else {
        a = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
      }
      chosen.insert(a);
    }
    for (auto a : chosen) {
      p.authors.push_back(a);
      slots.push_back(a);
    }
    s.papers.push_back(std::move(p));
  }
  return s;
}

}  // namespace fixtures

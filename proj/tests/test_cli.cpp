#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "support/fixtures.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fixtures::fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const fixtures::TempDir& dir, const std::string& args) {
  const auto out = dir / "stdout.txt", err = dir / "stderr.txt";
  std::string cmd = std::string("\"") + JOURNET_CLI + "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                    err.string() + "\"";
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string ingest(const fixtures::TempDir& dir, const fixtures::CorpusSpec& spec) {
  auto f = fixtures::write_csv(spec, dir.path());
  auto corpus = (dir / "corpus.jn").string();
  Run r = run(dir, "ingest --papers " + f.papers.string() + " --authors " + f.authors.string() + " --links " +
                       f.authorship.string() + " --refs " + f.references.string() + " --affils " +
                       f.affiliations->string() + " --out " + corpus);
  REQUIRE(r.code == 0);
  return corpus;
}

}  // namespace

TEST_CASE("stats and neighbours on the co-authorship table") {
  fixtures::TempDir dir;
  std::string corpus = ingest(dir, fixtures::table_one());
  Run stats = run(dir, "stats --corpus " + corpus + " --layer coauthorship");
  CHECK(stats.code == 0);
  CHECK(stats.out.rfind("nodes=8\nlinks=9\n", 0) == 0);
  CHECK(stats.out.find("components=2\n") != std::string::npos);

  Run csv = run(dir, "stats --corpus " + corpus + " --layer coauthorship --format csv --as-of v1n1");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("nodes,6\n") != std::string::npos);

  Run nb = run(dir, "neighbors --corpus " + corpus + " --layer coauthorship --node 3672 --depth 1");
  CHECK(nb.code == 0);
  CHECK(nb.out == "node_id,distance\n3671,1\n3673,1\n3674,1\n");

  auto report = (dir / "adj.csv").string();
  CHECK(run(dir, "export --corpus " + corpus + " --layer coauthorship --format adjacency --out " + report).code == 0);
  CHECK(slurp(report).find("\n3672,3671 3673 3674,3,1\n") != std::string::npos);

  auto dist = (dir / "dist.csv").string();
  CHECK(run(dir, "distribution --corpus " + corpus + " --layer coauthorship --out " + dist).code == 0);
  CHECK(slurp(dist) == "degree,count,fraction\n1,3,0.375\n3,5,0.625\n");
}

TEST_CASE("multi-layer and community commands") {
  fixtures::TempDir dir;
  std::string corpus = ingest(dir, fixtures::related_papers());
  const std::string layers = " --layers paper-common-author,paper-citation,paper-common-pacs";
  Run rank = run(dir, "rank --corpus " + corpus + " --node v4n4p14" + layers);
  CHECK(rank.code == 0);
  CHECK(rank.out.rfind("node_id,layer_count,weight_sum\nv4n2p17,3,3\n", 0) == 0);
  Run overlap = run(dir, "overlap --corpus " + corpus + " --node v4n4p14" + layers);
  CHECK(overlap.code == 0);
  CHECK(overlap.out.find("common,v4n2p17\n") != std::string::npos);

  Run gn = run(dir, "communities --corpus " + corpus + " --layer paper-common-pacs --dump-dendrogram");
  CHECK(gn.code == 0);
  CHECK(gn.out.rfind("removed_edges=0 ", 0) == 0);
  CHECK(gn.out.find("node_id,community_label\n") != std::string::npos);

  auto evo = (dir / "evo.csv").string();
  CHECK(run(dir, "evolution --corpus " + corpus + " --layer paper-citation --metric link_count --out " + evo).code == 0);
  CHECK(slurp(evo) == "time,value\nv4n1,0\nv4n2,0\nv4n3,0\nv4n4,1\nv5n1,2\n");

  auto net = (dir / "g.net").string();
  CHECK(run(dir, "export --corpus " + corpus + " --layer paper-citation --format pajek --out " + net).code == 0);
  CHECK(slurp(net).rfind("*Vertices 5\n", 0) == 0);
}

TEST_CASE("exit codes") {
  fixtures::TempDir dir;
  std::string corpus = ingest(dir, fixtures::table_one());
  CHECK(run(dir, "").code == 1);
  CHECK(run(dir, "frobnicate").code == 1);
  CHECK(run(dir, "stats --corpus " + corpus).code == 1);
  Run layer = run(dir, "stats --corpus " + corpus + " --layer friendship");
  CHECK(layer.code == 1);
  CHECK(layer.err.find("coauthorship") != std::string::npos);
  CHECK(run(dir, "neighbors --corpus " + corpus + " --layer coauthorship --node 3672 --depth 0").code == 1);
  CHECK(run(dir, "neighbors --corpus " + corpus + " --layer coauthorship --node 424242 --depth 1").code == 2);
  CHECK(run(dir, "stats --corpus " + (dir / "missing.jn").string() + " --layer coauthorship").code == 2);
  CHECK(run(dir, "stats --corpus " + corpus + " --layer coauthorship --format yaml").code == 1);

  fixtures::CorpusSpec broken = fixtures::table_one();
  auto f = fixtures::write_csv(broken, dir.path());
  {
    std::ofstream extra(f.authorship, std::ios::app);
    extra << "v1n1p1,999,9\n";
  }
  Run bad = run(dir, "ingest --papers " + f.papers.string() + " --authors " + f.authors.string() + " --links " +
                         f.authorship.string() + " --refs " + f.references.string() + " --out " +
                         (dir / "x.jn").string());
  CHECK(bad.code == 2);
  CHECK(bad.err.find("authorship.csv") != std::string::npos);
}

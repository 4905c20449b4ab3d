#include "doctest.h"

#include <random>

#include "journet/error.hpp"
#include "journet/graph.hpp"
#include "journet/layers.hpp"
#include "support/fixtures.hpp"

using namespace journet;

namespace {

NodeRef A(int i) { return NodeRef::author(i); }

}  // namespace

TEST_CASE("node ordering is numeric for authors and lexicographic otherwise") {
  CHECK(A(9) < A(10));
  CHECK(A(100) < A(3671));
  CHECK(NodeRef::paper("v10n1p1") < NodeRef::paper("v4n4p14"));
  CHECK(A(99999) < NodeRef::paper("v1n1p1"));
  CHECK(NodeRef::paper("v9n9p9") < NodeRef::pacs("00.00.00"));
}

TEST_CASE("build_graph degrees and aggregation") {
  std::vector<Link> path{{A(1), A(2), 1}, {A(2), A(3), 1}};
  Graph g = build_graph(false, path);
  CHECK(g.node_count() == 3);
  CHECK(g.link_count() == 2);
  CHECK(g.out(0).size() == 1);
  CHECK(g.out(1).size() == 2);
  CHECK(g.out(2).size() == 1);

  std::vector<Link> twice{{A(1), A(2), 1}, {A(2), A(1), 2}};
  Graph h = build_graph(false, twice);
  CHECK(h.link_count() == 1);
  CHECK(h.weight(0, 1) == 3);
  CHECK(h.weight(1, 0) == 3);

  Graph d = build_graph(true, twice);
  CHECK(d.link_count() == 2);
  CHECK(d.weight(0, 1) == 1);
  CHECK(d.weight(1, 0) == 2);
}

TEST_CASE("self loops and zero weights are rejected") {
  std::vector<Link> loop{{A(4), A(4), 1}};
  try {
    build_graph(false, loop);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(4, 4)") != std::string::npos);
  }
  std::vector<Link> zero{{A(1), A(2), 0}};
  CHECK_THROWS_AS(build_graph(false, zero), Error);
}

TEST_CASE("isolated nodes are kept") {
  std::vector<Link> links{{A(1), A(2), 1}};
  std::vector<NodeRef> iso{A(7)};
  Graph g = build_graph(false, links, iso);
  CHECK(g.node_count() == 3);
  auto rows = adjacency_rows(g);
  CHECK(rows.back().node == A(7));
  CHECK(rows.back().degree == 0);
  CHECK(rows.back().neighbours.empty());
}

TEST_CASE("random links aggregate like a dense matrix") {
  std::mt19937_64 rng(1);
  for (bool directed : {false, true}) {
    std::vector<std::vector<Weight>> dense(20, std::vector<Weight>(20, 0));
    std::vector<Link> links;
    std::uniform_int_distribution<int> node(0, 19), weight(1, 3);
    while (links.size() < 100) {
      int u = node(rng), v = node(rng);
      if (u == v) continue;
      Weight w = static_cast<Weight>(weight(rng));
      links.push_back({A(u), A(v), w});
      dense[u][v] += w;
      if (!directed) dense[v][u] += w;
    }
    Graph g = build_graph(directed, links);
    std::size_t expected_links = 0;
    for (int u = 0; u < 20; ++u)
      for (int v = 0; v < 20; ++v) {
        if (dense[u][v] == 0) continue;
        if (directed || u < v) ++expected_links;
        auto iu = g.index_of(A(u)), iv = g.index_of(A(v));
        REQUIRE(iu);
        REQUIRE(iv);
        CHECK(g.weight(*iu, *iv) == dense[u][v]);
      }
    CHECK(g.link_count() == expected_links);

    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < g.node_count(); ++i) degree_sum += g.out(i).size();
    CHECK(degree_sum == (directed ? g.link_count() : 2 * g.link_count()));
  }
}

TEST_CASE("insertion order does not matter") {
  std::mt19937_64 rng(2);
  std::vector<Link> links;
  std::uniform_int_distribution<int> node(0, 14);
  while (links.size() < 40) {
    int u = node(rng), v = node(rng);
    if (u != v) links.push_back({A(u), A(v), 1});
  }
  Graph g = build_graph(false, links);
  auto rows = adjacency_rows(g);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(links.begin(), links.end(), rng);
    Graph h = build_graph(false, links);
    CHECK(h == g);
    CHECK(adjacency_rows(h) == rows);
  }
}

TEST_CASE("adjacency rows reproduce the co-authorship table") {
  Corpus c = fixtures::ingest(fixtures::table_one());
  Graph g = build_layer(c, LayerSpec::CoAuthorship);
  auto rows = adjacency_rows(g);
  auto it = std::find_if(rows.begin(), rows.end(), [](const AdjacencyRow& r) { return r.node == A(3672); });
  REQUIRE(it != rows.end());
  CHECK(it->neighbours == std::vector<NodeRef>{A(3671), A(3673), A(3674)});
  CHECK(it->degree == 3);
  CHECK(it->aux_count == 1);

  auto hub = std::find_if(rows.begin(), rows.end(), [](const AdjacencyRow& r) { return r.node == A(100); });
  CHECK(hub->neighbours == std::vector<NodeRef>{A(4368), A(4385), A(10446)});
  CHECK(hub->aux_count == 3);

  std::map<NodeRef, std::int64_t> aux;
  for (const auto& n : g.nodes()) aux[n] = 42;
  CHECK(adjacency_rows(g, &aux).front().aux_count == 42);
  aux.erase(A(100));
  CHECK_THROWS_AS(adjacency_rows(g, &aux), Error);
}

TEST_CASE("directed adjacency rows use the union of in and out neighbours") {
  std::vector<Link> arcs{{A(1), A(2), 1}, {A(2), A(1), 1}, {A(3), A(1), 1}};
  Graph g = build_graph(true, arcs);
  auto rows = adjacency_rows(g);
  CHECK(rows[0].neighbours == std::vector<NodeRef>{A(2), A(3)});
  CHECK(rows[0].degree == 2);
}

TEST_CASE("random graph row degrees equal a scan of all links") {
  std::mt19937_64 rng(3);
  std::vector<Link> links;
  std::uniform_int_distribution<int> node(0, 14);
  while (links.size() < 30) {
    int u = node(rng), v = node(rng);
    if (u != v) links.push_back({A(u), A(v), 1});
  }
  std::vector<NodeRef> all;
  for (int i = 0; i < 15; ++i) all.push_back(A(i));
  Graph g = build_graph(false, links, all);
  for (const auto& row : adjacency_rows(g)) {
    std::set<NodeRef> seen;
    for (const auto& l : links) {
      if (l.from == row.node) seen.insert(l.to);
      if (l.to == row.node) seen.insert(l.from);
    }
    CHECK(row.degree == seen.size());
  }
}

TEST_CASE("symmetrized directed graph sums both directions") {
  std::vector<Link> arcs{{A(1), A(2), 2}, {A(2), A(1), 3}, {A(2), A(3), 1}};
  Graph s = build_graph(true, arcs).symmetrized();
  CHECK_FALSE(s.directed());
  CHECK(s.link_count() == 2);
  CHECK(s.weight(0, 1) == 5);
}

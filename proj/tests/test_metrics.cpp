#include "doctest.h"

#include <cmath>
#include <random>

#include "journet/error.hpp"
#include "journet/metrics.hpp"
#include "support/convert.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace journet;
using fixtures::graph_from_matrix;
using fixtures::matrix_from_edges;

TEST_CASE("triangle") {
  Graph g = graph_from_matrix(matrix_from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
  auto c = clustering(g);
  for (double v : c.coefficient) CHECK(v == 1.0);
  CHECK(c.mean == 1.0);
  auto d = degree_stats(g);
  CHECK(d.mean == 2.0);
  CHECK(d.max == 2);
  auto p = path_stats(g);
  CHECK(p.diameter == 1);
  CHECK(p.mean_shortest_path == 1.0);
}

TEST_CASE("star with four leaves") {
  Graph g = graph_from_matrix(matrix_from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  auto d = degree_stats(g);
  CHECK(d.mean == doctest::Approx(8.0 / 5.0).epsilon(1e-15));
  CHECK(d.max == 4);
  CHECK(d.distribution.counts == std::map<std::uint64_t, std::uint64_t>{{1, 4}, {4, 1}});
  CHECK(d.distribution.fraction(1) == doctest::Approx(0.8));
  CHECK(clustering(g).mean == 0.0);
}

TEST_CASE("path of four nodes") {
  Graph g = graph_from_matrix(matrix_from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  auto p = path_stats(g);
  CHECK(p.diameter == 3);
  CHECK(p.mean_shortest_path == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(p.component_count == 1);
  CHECK(p.giant_component_size == 4);
}

TEST_CASE("two disjoint edges") {
  Graph g = graph_from_matrix(matrix_from_edges(4, {{0, 1}, {2, 3}}));
  auto p = path_stats(g);
  CHECK(p.component_count == 2);
  CHECK(p.giant_component_size == 2);
  CHECK(p.diameter == 1);
  auto comps = connected_components(g);
  CHECK(comps.giant == 0);
  CHECK(bfs_distances(g, 0)[2] == kUnreachable);
}

TEST_CASE("empty graph has zero metrics") {
  Graph g = build_graph(false, {});
  auto r = metrics_report(g);
  CHECK(r.node_count == 0);
  CHECK(r.mean_degree == 0.0);
  CHECK(r.component_count == 0);
}

TEST_CASE("directed degrees count both directions") {
  std::vector<Link> arcs{{NodeRef::author(1), NodeRef::author(2), 1}, {NodeRef::author(3), NodeRef::author(2), 1}};
  Graph g = build_graph(true, arcs);
  CHECK(degrees(g) == std::vector<std::uint64_t>{1, 2, 1});
  auto d = degree_stats(g);
  CHECK(d.mean_in == doctest::Approx(2.0 / 3.0));
  CHECK(d.mean_out == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("clustering and distances match brute-force oracles") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> size(1, 50);
  std::uniform_real_distribution<double> density(0.02, 0.4);
  for (int round = 0; round < 50; ++round) {
    auto adj = oracle::random_graph(rng, size(rng), density(rng));
    Graph g = graph_from_matrix(adj);
    auto expected = oracle::clustering(adj);
    auto got = clustering(g);
    for (std::size_t v = 0; v < adj.size(); ++v) CHECK(std::abs(got.coefficient[v] - expected[v].value()) < 1e-12);
    auto d = oracle::floyd_warshall(adj);
    for (std::size_t s = 0; s < adj.size(); ++s) {
      auto row = bfs_distances(g, s);
      for (std::size_t t = 0; t < adj.size(); ++t)
        CHECK(row[t] == (d[s][t] >= oracle::kInf ? kUnreachable : d[s][t]));
    }
  }
}

TEST_CASE("complete graphs") {
  for (std::size_t n = 2; n <= 8; ++n) {
    oracle::Matrix adj(n, std::vector<std::uint64_t>(n, 1));
    for (std::size_t i = 0; i < n; ++i) adj[i][i] = 0;
    auto r = metrics_report(graph_from_matrix(adj));
    CHECK(r.mean_degree == static_cast<double>(n - 1));
    CHECK(r.mean_clustering == (n > 2 ? 1.0 : 0.0));
    CHECK(r.mean_shortest_path == 1.0);
    CHECK(r.diameter == 1);
  }
}

TEST_CASE("metrics do not depend on node labels") {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 10; ++round) {
    auto adj = oracle::random_graph(rng, 25, 0.15);
    std::vector<std::size_t> perm(25);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    oracle::Matrix relabelled(25, std::vector<std::uint64_t>(25, 0));
    for (std::size_t i = 0; i < 25; ++i)
      for (std::size_t j = 0; j < 25; ++j) relabelled[perm[i]][perm[j]] = adj[i][j];
    auto a = metrics_report(graph_from_matrix(adj));
    auto b = metrics_report(graph_from_matrix(relabelled));
    CHECK(a.node_count == b.node_count);
    CHECK(a.link_count == b.link_count);
    CHECK(a.mean_degree == b.mean_degree);
    CHECK(a.max_degree == b.max_degree);
    CHECK(a.mean_clustering == doctest::Approx(b.mean_clustering).epsilon(1e-12));
    CHECK(a.diameter == b.diameter);
    CHECK(a.component_count == b.component_count);
    CHECK(a.giant_component_size == b.giant_component_size);
  }
}

TEST_CASE("report formats") {
  Graph g = graph_from_matrix(matrix_from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  auto r = metrics_report(g);
  std::string kv = format_report_kv(r);
  CHECK(kv.find("nodes=4\n") != std::string::npos);
  CHECK(kv.find("links=3\n") != std::string::npos);
  CHECK(kv.find("diameter=3\n") != std::string::npos);
  std::string csv = format_report_csv(r);
  CHECK(csv.rfind("metric,value\n", 0) == 0);
  CHECK(csv.find("mean_degree,1.5\n") != std::string::npos);
  CHECK(format_distribution_csv(degree_stats(g).distribution) == "degree,count,fraction\n1,2,0.5\n2,2,0.5\n");
}

TEST_CASE("metric names") {
  for (auto m : all_evolution_metrics()) CHECK(parse_metric(metric_name(m)) == m);
  CHECK_THROWS_AS(parse_metric("entropy"), Error);
}

TEST_CASE("evolution series") {
  SUBCASE("single issue corpus has one point") {
    Corpus c = fixtures::ingest(fixtures::random_corpus(1, {.volumes = 1, .issues = 1}));
    auto s = evolution_series(c, LayerSpec::CoAuthorship, EvolutionMetric::NodeCount);
    REQUIRE(s.points.size() == 1);
    CHECK(s.points[0].second == static_cast<double>(build_layer(c, LayerSpec::CoAuthorship).node_count()));
  }
  SUBCASE("growth is monotone and each point matches a fresh snapshot") {
    Corpus c = fixtures::ingest(fixtures::random_corpus(2, {.papers = 30, .volumes = 1, .issues = 3}));
    for (auto metric : {EvolutionMetric::NodeCount, EvolutionMetric::LinkCount, EvolutionMetric::MeanClustering}) {
      auto s = evolution_series(c, LayerSpec::CoAuthorship, metric);
      CHECK(s.points.size() == c.time_indexes().size());
      for (std::size_t i = 0; i < s.points.size(); ++i) {
        Graph g = build_layer(snapshot(c, s.points[i].first), LayerSpec::CoAuthorship);
        CHECK(s.points[i].second == metric_value(g, metric));
        if (i > 0 && metric != EvolutionMetric::MeanClustering) CHECK(s.points[i].second >= s.points[i - 1].second);
      }
    }
  }
  SUBCASE("csv") {
    Corpus c = fixtures::ingest(fixtures::table_one());
    auto s = evolution_series(c, LayerSpec::CoAuthorship, EvolutionMetric::NodeCount);
    CHECK(format_evolution_csv(s) == "time,value\nv1n1,6\nv1n2,8\n");
  }
}

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "journet/corpus.hpp"
#include "journet/graph.hpp"
#include "journet/layers.hpp"

namespace journet {

struct DegreeDistribution {
  std::map<std::uint64_t, std::uint64_t> counts;  // degree -> node count
  std::uint64_t node_count = 0;

  double fraction(std::uint64_t degree) const;
  bool operator==(const DegreeDistribution&) const = default;
};

struct DegreeStats {
  double mean = 0.0;
  std::uint64_t max = 0;
  DegreeDistribution distribution;
  // Directed graphs only; zero otherwise.
  double mean_in = 0.0;
  double mean_out = 0.0;
};

/// Per-node degree.  Directed graphs count in-arcs plus out-arcs.
std::vector<std::uint64_t> degrees(const Graph& graph);
DegreeStats degree_stats(const Graph& graph);

struct ClusteringResult {
  std::vector<double> coefficient;      // per node, graph order
  std::vector<std::uint64_t> triangles; // links among each node's neighbours
  double mean = 0.0;
  double max = 0.0;
};

/// Local clustering on the undirected topology; C(v) = 0 when degree < 2.
ClusteringResult clustering(const Graph& graph);

struct Components {
  std::vector<std::size_t> component_of;        // per node
  std::vector<std::vector<std::size_t>> members; // sorted, in order of smallest member
  std::size_t giant = 0;                         // index into members
};

Components connected_components(const Graph& graph);

/// Hop distances from `source` over the undirected topology; unreachable
/// nodes get kUnreachable.
inline constexpr std::uint64_t kUnreachable = ~std::uint64_t{0};
std::vector<std::uint64_t> bfs_distances(const Graph& graph, std::size_t source);

struct PathStats {
  double mean_shortest_path = 0.0;
  std::uint64_t diameter = 0;
  std::uint64_t component_count = 0;
  std::uint64_t giant_component_size = 0;
};

/// Mean path and diameter over the largest component (ties: the component
/// holding the smallest node).
PathStats path_stats(const Graph& graph);

struct MetricsReport {
  std::uint64_t node_count = 0;
  std::uint64_t link_count = 0;
  double mean_degree = 0.0;
  std::uint64_t max_degree = 0;
  double mean_clustering = 0.0;
  double max_clustering = 0.0;
  double mean_shortest_path = 0.0;
  std::uint64_t diameter = 0;
  std::uint64_t component_count = 0;
  std::uint64_t giant_component_size = 0;

  bool operator==(const MetricsReport&) const = default;
};

MetricsReport metrics_report(const Graph& graph);

/// key=value lines with keys nodes, links, mean_degree, max_degree,
/// mean_clustering, max_clustering, mean_path, diameter, components,
/// giant_size.
std::string format_report_kv(const MetricsReport& report);
/// "metric,value" header then one row per key above.
std::string format_report_csv(const MetricsReport& report);
/// "degree,count,fraction" rows, ascending degree.
std::string format_distribution_csv(const DegreeDistribution& dist);

enum class EvolutionMetric {
  NodeCount,
  LinkCount,
  MeanDegree,
  MeanClustering,
  GiantComponentSize,
  ComponentCount,
};

std::span<const EvolutionMetric> all_evolution_metrics();
std::string_view metric_name(EvolutionMetric metric);
/// Throws Error{Usage} listing valid names.
EvolutionMetric parse_metric(std::string_view name);

double metric_value(const Graph& graph, EvolutionMetric metric);

struct EvolutionSeries {
  LayerSpec layer;
  EvolutionMetric metric;
  std::vector<std::pair<TimeIndex, double>> points;
};

EvolutionSeries evolution_series(const Corpus& corpus, LayerSpec layer,
                                 EvolutionMetric metric);

/// "time,value" header, time rendered as vVnI.
std::string format_evolution_csv(const EvolutionSeries& series);

}  // namespace journet

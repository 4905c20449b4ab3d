#pragma once

// Girvan-Newman divisive clustering: repeatedly drop the edge with the highest
// shortest-path betweenness and score every new split by modularity against
// the original graph.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "journet/graph.hpp"

namespace journet {

/// Keyed by (smaller node index, larger node index).
using EdgeKey = std::pair<std::size_t, std::size_t>;
using EdgeBetweennessMap = std::map<EdgeKey, double>;

/// Hop-count edge betweenness over unordered node pairs, with each pair's
/// unit of flow split evenly across its shortest paths.  Directed graphs are
/// symmetrized; weights are ignored.
EdgeBetweennessMap edge_betweenness(const Graph& graph);

/// Same computation on a raw undirected adjacency (sorted, no duplicates).
EdgeBetweennessMap edge_betweenness(const std::vector<std::vector<std::size_t>>& adjacency);

struct Partition {
  std::vector<std::size_t> label;  // per node index
  std::size_t community_count = 0;

  /// Relabels so that communities are numbered in order of their smallest
  /// node index.
  static Partition canonical(const std::vector<std::size_t>& raw_labels);

  bool operator==(const Partition&) const = default;
};

/// Unweighted Newman modularity.  Throws Error{Data} for an edgeless graph and
/// Error{Usage} when the partition does not match the node count.
double modularity(const Graph& graph, const Partition& partition);

struct CommunityLevel {
  std::size_t removed_edges = 0;
  Partition partition;
  double modularity = 0.0;
};

struct CommunityResult {
  std::vector<NodeRef> nodes;
  std::vector<CommunityLevel> levels;
  std::size_t best = 0;
  std::size_t total_removals = 0;

  const Partition& best_partition() const { return levels[best].partition; }
};

/// Throws Error{Data} for an edgeless graph.
CommunityResult girvan_newman(const Graph& graph);

/// Members of node's community in the best partition, sorted.  Throws
/// Error{NotFound} for an unknown node.
std::vector<NodeRef> community_of(const CommunityResult& result, const NodeRef& node);

/// "node_id,community_label" rows for the best partition.
std::string format_partition_csv(const CommunityResult& result);
/// One "removed_edges=<k> communities=<c> Q=<value>" line per level.
std::string format_dendrogram(const CommunityResult& result);

}  // namespace journet

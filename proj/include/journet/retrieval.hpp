#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "journet/corpus.hpp"
#include "journet/graph.hpp"
#include "journet/layers.hpp"

namespace journet {

/// Which arcs a traversal may follow on a directed graph.  Undirected graphs
/// ignore this.
enum class Direction { Out, In, Both };

struct NeighborhoodResult {
  NodeRef seed;
  std::uint32_t depth = 0;
  std::map<NodeRef, std::uint32_t> members;  // node -> hop distance, seed excluded
};

/// Throws Error{NotFound} for an unknown seed, Error{Usage} for depth 0.
NeighborhoodResult neighborhood(const Graph& graph, const NodeRef& seed,
                                std::uint32_t depth,
                                Direction direction = Direction::Both);

/// A built layer handed to the multi-layer queries.
struct LayerGraph {
  LayerSpec spec;
  const Graph* graph;
};

struct OverlapResult {
  NodeRef seed;
  std::vector<LayerSpec> layers;
  std::set<NodeRef> common;
  std::map<LayerSpec, std::set<NodeRef>> per_layer;
};

struct RankedEntry {
  NodeRef node;
  std::uint32_t layer_count = 0;
  std::uint64_t weight_sum = 0;

  bool operator==(const RankedEntry&) const = default;
};

using RankedRelated = std::vector<RankedEntry>;

/// Requires at least two distinct layers whose node kinds include the seed's
/// kind (Error{Usage} otherwise) and the seed present in each (Error{NotFound}).
OverlapResult layer_overlap(std::span<const LayerGraph> layers, const NodeRef& seed,
                            Direction citation_direction = Direction::Both);
OverlapResult layer_overlap(const Corpus& corpus, const NodeRef& seed,
                            std::span<const LayerSpec> layers,
                            Direction citation_direction = Direction::Both);

/// Sorted by layer_count desc, weight_sum desc, node asc.
RankedRelated related_rank(std::span<const LayerGraph> layers, const NodeRef& seed,
                           Direction citation_direction = Direction::Both);
RankedRelated related_rank(const Corpus& corpus, const NodeRef& seed,
                           std::span<const LayerSpec> layers,
                           Direction citation_direction = Direction::Both);

/// "node_id,distance" rows ordered by distance then node.
std::string format_neighborhood_csv(const NeighborhoodResult& result);
/// "set,node_id" rows: one block per layer token, then "common".
std::string format_overlap_csv(const OverlapResult& result);
/// "node_id,layer_count,weight_sum" rows in rank order.
std::string format_rank_csv(const RankedRelated& ranking);

}  // namespace journet

#include "journet/retrieval.hpp"

#include <algorithm>
#include <deque>
#include <memory>

#include "journet/error.hpp"
#include "journet/io.hpp"

namespace journet {

namespace {

std::size_t require_node(const Graph& graph, const NodeRef& node) {
  auto idx = graph.index_of(node);
  if (!idx)
    throw Error(ErrorKind::NotFound,
                "node " + std::string(node_kind_name(node.kind)) + " '" + node.id + "' is not in the graph");
  return *idx;
}

// Adjacent nodes of `seed` with the link weight, merging both directions on
// directed graphs when asked.
std::map<std::size_t, Weight> adjacent(const Graph& graph, std::size_t seed, Direction dir) {
  std::map<std::size_t, Weight> out;
  if (!graph.directed() || dir != Direction::In)
    for (const auto& n : graph.out(seed)) out[n.index] += n.weight;
  if (graph.directed() && dir != Direction::Out)
    for (const auto& n : graph.in(seed)) out[n.index] += n.weight;
  return out;
}

void check_layers(std::span<const LayerGraph> layers, const NodeRef& seed) {
  if (layers.size() < 2)
    throw Error(ErrorKind::Usage, "multi-layer queries need at least two layers");
  std::set<LayerSpec> seen;
  for (const auto& l : layers) {
    if (!seen.insert(l.spec).second)
      throw Error(ErrorKind::Usage, "layer '" + std::string(layer_token(l.spec)) + "' listed twice");
    auto kinds = layer_node_kinds(l.spec);
    if (std::find(kinds.begin(), kinds.end(), seed.kind) == kinds.end())
      throw Error(ErrorKind::Usage, std::string(node_kind_name(seed.kind)) + " seed '" + seed.id +
                                        "' does not fit layer '" + std::string(layer_token(l.spec)) + "'");
  }
}

template <typename Fn>
auto with_built_layers(const Corpus& corpus, std::span<const LayerSpec> specs, Fn&& fn) {
  std::vector<std::unique_ptr<Graph>> graphs;
  std::vector<LayerGraph> layers;
  for (LayerSpec spec : specs) {
    graphs.push_back(std::make_unique<Graph>(build_layer(corpus, spec)));
    layers.push_back({spec, graphs.back().get()});
  }
  return fn(std::span<const LayerGraph>(layers));
}

}  // namespace

NeighborhoodResult neighborhood(const Graph& graph, const NodeRef& seed, std::uint32_t depth,
                                Direction direction) {
  if (depth == 0) throw Error(ErrorKind::Usage, "depth must be >= 1");
  const std::size_t s = require_node(graph, seed);
  NeighborhoodResult r{seed, depth, {}};
  std::vector<std::uint32_t> dist(graph.node_count(), 0);
  std::vector<bool> seen(graph.node_count(), false);
  seen[s] = true;
  std::deque<std::size_t> queue{s};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (dist[v] == depth) continue;
    for (const auto& [w, _] : adjacent(graph, v, direction)) {
      if (seen[w]) continue;
      seen[w] = true;
      dist[w] = dist[v] + 1;
      r.members.emplace(graph.node(w), dist[w]);
      queue.push_back(w);
    }
  }
  return r;
}

OverlapResult layer_overlap(std::span<const LayerGraph> layers, const NodeRef& seed,
                            Direction citation_direction) {
  check_layers(layers, seed);
  OverlapResult r;
  r.seed = seed;
  for (const auto& l : layers) {
    r.layers.push_back(l.spec);
    const std::size_t s = require_node(*l.graph, seed);
    auto& set = r.per_layer[l.spec];
    for (const auto& [w, _] : adjacent(*l.graph, s, citation_direction)) set.insert(l.graph->node(w));
  }
  r.common = r.per_layer.begin()->second;
  for (const auto& [_, set] : r.per_layer) {
    std::set<NodeRef> keep;
    std::set_intersection(r.common.begin(), r.common.end(), set.begin(), set.end(),
                          std::inserter(keep, keep.end()));
    r.common = std::move(keep);
  }
  return r;
}

OverlapResult layer_overlap(const Corpus& corpus, const NodeRef& seed,
                            std::span<const LayerSpec> layers, Direction citation_direction) {
  return with_built_layers(corpus, layers, [&](std::span<const LayerGraph> built) {
    return layer_overlap(built, seed, citation_direction);
  });
}

RankedRelated related_rank(std::span<const LayerGraph> layers, const NodeRef& seed,
                           Direction citation_direction) {
  check_layers(layers, seed);
  std::map<NodeRef, RankedEntry> acc;
  for (const auto& l : layers) {
    const std::size_t s = require_node(*l.graph, seed);
    for (const auto& [w, weight] : adjacent(*l.graph, s, citation_direction)) {
      auto& e = acc[l.graph->node(w)];
      e.node = l.graph->node(w);
      e.layer_count += 1;
      e.weight_sum += weight;
    }
  }
  RankedRelated ranking;
  ranking.reserve(acc.size());
  for (auto& [_, e] : acc) ranking.push_back(std::move(e));
  std::sort(ranking.begin(), ranking.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.layer_count != b.layer_count) return a.layer_count > b.layer_count;
    if (a.weight_sum != b.weight_sum) return a.weight_sum > b.weight_sum;
    return a.node < b.node;
  });
  return ranking;
}

RankedRelated related_rank(const Corpus& corpus, const NodeRef& seed,
                           std::span<const LayerSpec> layers, Direction citation_direction) {
  return with_built_layers(corpus, layers, [&](std::span<const LayerGraph> built) {
    return related_rank(built, seed, citation_direction);
  });
}

std::string format_neighborhood_csv(const NeighborhoodResult& result) {
  std::vector<std::pair<std::uint32_t, NodeRef>> rows;
  for (const auto& [node, d] : result.members) rows.emplace_back(d, node);
  std::sort(rows.begin(), rows.end());
  std::string out = "node_id,distance\n";
  for (const auto& [d, node] : rows) out += csv_field(node.id) + "," + std::to_string(d) + "\n";
  return out;
}

std::string format_overlap_csv(const OverlapResult& result) {
  std::string out = "set,node_id\n";
  for (LayerSpec spec : result.layers)
    for (const auto& node : result.per_layer.at(spec))
      out += std::string(layer_token(spec)) + "," + csv_field(node.id) + "\n";
  for (const auto& node : result.common) out += "common," + csv_field(node.id) + "\n";
  return out;
}

std::string format_rank_csv(const RankedRelated& ranking) {
  std::string out = "node_id,layer_count,weight_sum\n";
  for (const auto& e : ranking)
    out += csv_field(e.node.id) + "," + std::to_string(e.layer_count) + "," +
           std::to_string(e.weight_sum) + "\n";
  return out;
}

}  // namespace journet

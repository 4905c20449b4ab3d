#include "journet/communities.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "journet/error.hpp"
#include "journet/io.hpp"

namespace journet {

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

std::size_t edge_count(const Adjacency& adj) {
  std::size_t twice = 0;
  for (const auto& row : adj) twice += row.size();
  return twice / 2;
}

// Labels components in order of their smallest node, which is already the
// canonical labelling.
std::vector<std::size_t> component_labels(const Adjacency& adj, std::size_t& count) {
  const std::size_t none = adj.size();
  std::vector<std::size_t> label(adj.size(), none);
  count = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (label[s] != none) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (label[w] == none) {
          label[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return label;
}

double modularity_of(const Adjacency& adj, const Partition& p) {
  const double m = static_cast<double>(edge_count(adj));
  std::vector<double> inside(p.community_count, 0.0), degree(p.community_count, 0.0);
  for (std::size_t u = 0; u < adj.size(); ++u) {
    degree[p.label[u]] += static_cast<double>(adj[u].size());
    for (std::size_t v : adj[u])
      if (u < v && p.label[u] == p.label[v]) inside[p.label[u]] += 1.0;
  }
  double q = 0.0;
  for (std::size_t c = 0; c < p.community_count; ++c) {
    const double share = degree[c] / (2.0 * m);
    q += inside[c] / m - share * share;
  }
  return q;
}

}  // namespace

EdgeBetweennessMap edge_betweenness(const Adjacency& adj) {
  const std::size_t n = adj.size();
  // Edge slots parallel to adj: slot[u][k] is the id of edge {u, adj[u][k]}.
  std::vector<std::vector<std::size_t>> slot(n);
  std::vector<EdgeKey> edges;
  for (std::size_t u = 0; u < n; ++u) {
    slot[u].resize(adj[u].size());
    for (std::size_t k = 0; k < adj[u].size(); ++k) {
      std::size_t v = adj[u][k];
      if (u < v) {
        slot[u][k] = edges.size();
        edges.emplace_back(u, v);
      } else {
        auto it = std::lower_bound(edges.begin(), edges.end(), EdgeKey{v, u});
        slot[u][k] = static_cast<std::size_t>(it - edges.begin());
      }
    }
  }

  std::vector<double> score(edges.size(), 0.0);
  std::vector<std::uint64_t> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<std::size_t> order;
  order.reserve(n);
  constexpr auto unseen = ~std::uint64_t{0};

  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), unseen);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (std::size_t w : adj[v]) {
        if (dist[w] == unseen) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      std::size_t w = *it;
      for (std::size_t k = 0; k < adj[w].size(); ++k) {
        std::size_t v = adj[w][k];
        if (dist[v] + 1 != dist[w] || dist[v] == unseen) continue;
        const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
        score[slot[w][k]] += c;
        delta[v] += c;
      }
    }
  }

  EdgeBetweennessMap out;
  // Every unordered pair was counted from both ends.
  for (std::size_t e = 0; e < edges.size(); ++e) out.emplace(edges[e], score[e] / 2.0);
  return out;
}

EdgeBetweennessMap edge_betweenness(const Graph& graph) {
  return edge_betweenness(graph.undirected_adjacency());
}

Partition Partition::canonical(const std::vector<std::size_t>& raw_labels) {
  Partition p;
  std::map<std::size_t, std::size_t> remap;
  p.label.reserve(raw_labels.size());
  for (std::size_t raw : raw_labels) {
    auto [it, inserted] = remap.emplace(raw, remap.size());
    p.label.push_back(it->second);
  }
  p.community_count = remap.size();
  return p;
}

double modularity(const Graph& graph, const Partition& partition) {
  if (partition.label.size() != graph.node_count())
    throw Error(ErrorKind::Usage, "partition covers " + std::to_string(partition.label.size()) +
                                      " nodes, graph has " + std::to_string(graph.node_count()));
  for (std::size_t l : partition.label)
    if (l >= partition.community_count)
      throw Error(ErrorKind::Usage, "partition label out of range");
  const auto adj = graph.undirected_adjacency();
  if (edge_count(adj) == 0) throw Error(ErrorKind::Data, "modularity is undefined for an edgeless graph");
  return modularity_of(adj, partition);
}

CommunityResult girvan_newman(const Graph& graph) {
  auto adj = graph.undirected_adjacency();
  const Adjacency original = adj;
  std::size_t remaining = edge_count(adj);
  if (remaining == 0) throw Error(ErrorKind::Data, "community detection needs at least one edge");

  CommunityResult result;
  result.nodes.assign(graph.nodes().begin(), graph.nodes().end());

  std::size_t components = 0;
  auto record = [&](std::size_t removed) {
    auto labels = component_labels(adj, components);
    CommunityLevel level;
    level.removed_edges = removed;
    level.partition = Partition::canonical(labels);
    level.modularity = modularity_of(original, level.partition);
    result.levels.push_back(std::move(level));
  };
  record(0);

  std::size_t removed = 0;
  while (remaining > 0) {
    const auto scores = edge_betweenness(adj);
    double top = -1.0;
    for (const auto& [_, v] : scores) top = std::max(top, v);
    const double tolerance = 1e-9 * std::max(1.0, top);
    // The map is ordered by (min endpoint, max endpoint): first hit wins ties.
    EdgeKey pick{};
    for (const auto& [e, v] : scores)
      if (v >= top - tolerance) {
        pick = e;
        break;
      }
    auto& a = adj[pick.first];
    auto& b = adj[pick.second];
    a.erase(std::lower_bound(a.begin(), a.end(), pick.second));
    b.erase(std::lower_bound(b.begin(), b.end(), pick.first));
    --remaining;
    ++removed;

    std::size_t before = components;
    std::size_t now = 0;
    component_labels(adj, now);
    if (now > before) record(removed);
    else components = now;
  }
  result.total_removals = removed;

  for (std::size_t i = 1; i < result.levels.size(); ++i) {
    const auto& cand = result.levels[i];
    const auto& best = result.levels[result.best];
    const double eps = 1e-12;
    if (cand.modularity > best.modularity + eps ||
        (std::abs(cand.modularity - best.modularity) <= eps &&
         cand.partition.community_count < best.partition.community_count))
      result.best = i;
  }
  return result;
}

std::vector<NodeRef> community_of(const CommunityResult& result, const NodeRef& node) {
  auto it = std::lower_bound(result.nodes.begin(), result.nodes.end(), node);
  if (it == result.nodes.end() || *it != node)
    throw Error(ErrorKind::NotFound,
                "node " + std::string(node_kind_name(node.kind)) + " '" + node.id + "' is not in the graph");
  const auto& p = result.best_partition();
  const std::size_t label = p.label[static_cast<std::size_t>(it - result.nodes.begin())];
  std::vector<NodeRef> members;
  for (std::size_t i = 0; i < result.nodes.size(); ++i)
    if (p.label[i] == label) members.push_back(result.nodes[i]);
  return members;
}

std::string format_partition_csv(const CommunityResult& result) {
  std::string out = "node_id,community_label\n";
  const auto& p = result.best_partition();
  for (std::size_t i = 0; i < result.nodes.size(); ++i)
    out += csv_field(result.nodes[i].id) + "," + std::to_string(p.label[i]) + "\n";
  return out;
}

std::string format_dendrogram(const CommunityResult& result) {
  std::string out;
  for (const auto& level : result.levels)
    out += "removed_edges=" + std::to_string(level.removed_edges) +
           " communities=" + std::to_string(level.partition.community_count) +
           " Q=" + format_real(level.modularity) + "\n";
  return out;
}

}  // namespace journet

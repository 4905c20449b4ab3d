#include "journet/metrics.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "journet/error.hpp"
#include "journet/io.hpp"

namespace journet {

namespace {

constexpr std::array kMetrics = {
    EvolutionMetric::NodeCount,       EvolutionMetric::LinkCount,
    EvolutionMetric::MeanDegree,      EvolutionMetric::MeanClustering,
    EvolutionMetric::GiantComponentSize, EvolutionMetric::ComponentCount,
};

std::vector<std::uint64_t> bfs(const std::vector<std::vector<std::size_t>>& adj,
                               std::size_t source) {
  std::vector<std::uint64_t> dist(adj.size(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[v]) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Components components_of(const std::vector<std::vector<std::size_t>>& adj) {
  Components c;
  const std::size_t none = adj.size();
  c.component_of.assign(adj.size(), none);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (c.component_of[s] != none) continue;
    const std::size_t id = c.members.size();
    std::vector<std::size_t> members{s};
    c.component_of[s] = id;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t w : adj[members[k]])
        if (c.component_of[w] == none) {
          c.component_of[w] = id;
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    c.members.push_back(std::move(members));
  }
  for (std::size_t i = 1; i < c.members.size(); ++i)
    if (c.members[i].size() > c.members[c.giant].size()) c.giant = i;
  return c;
}

}  // namespace

double DegreeDistribution::fraction(std::uint64_t degree) const {
  auto it = counts.find(degree);
  if (it == counts.end() || node_count == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(node_count);
}

std::vector<std::uint64_t> degrees(const Graph& graph) {
  std::vector<std::uint64_t> deg(graph.node_count());
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    deg[i] = graph.out(i).size();
    if (graph.directed()) deg[i] += graph.in(i).size();
  }
  return deg;
}

DegreeStats degree_stats(const Graph& graph) {
  DegreeStats stats;
  const auto deg = degrees(graph);
  stats.distribution.node_count = deg.size();
  if (deg.empty()) return stats;
  std::uint64_t total = 0;
  for (auto d : deg) {
    total += d;
    stats.max = std::max(stats.max, d);
    ++stats.distribution.counts[d];
  }
  const double n = static_cast<double>(deg.size());
  stats.mean = static_cast<double>(total) / n;
  if (graph.directed()) {
    stats.mean_in = stats.mean_out = static_cast<double>(graph.link_count()) / n;
  }
  return stats;
}

ClusteringResult clustering(const Graph& graph) {
  ClusteringResult r;
  const auto adj = graph.undirected_adjacency();
  const std::size_t n = adj.size();
  r.coefficient.assign(n, 0.0);
  r.triangles.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& nv = adj[v];
    const std::uint64_t k = nv.size();
    if (k < 2) continue;
    std::uint64_t links = 0;
    for (std::size_t a : nv) {
      // Count neighbours b > a of v that are also adjacent to a.
      const auto& na = adj[a];
      auto it = std::upper_bound(nv.begin(), nv.end(), a);
      auto jt = std::upper_bound(na.begin(), na.end(), a);
      while (it != nv.end() && jt != na.end()) {
        if (*it < *jt) ++it;
        else if (*jt < *it) ++jt;
        else { ++links; ++it; ++jt; }
      }
    }
    r.triangles[v] = links;
    r.coefficient[v] = static_cast<double>(2 * links) / static_cast<double>(k * (k - 1));
  }
  if (n > 0) {
    r.mean = std::accumulate(r.coefficient.begin(), r.coefficient.end(), 0.0) / static_cast<double>(n);
    r.max = *std::max_element(r.coefficient.begin(), r.coefficient.end());
  }
  return r;
}

Components connected_components(const Graph& graph) {
  return components_of(graph.undirected_adjacency());
}

std::vector<std::uint64_t> bfs_distances(const Graph& graph, std::size_t source) {
  return bfs(graph.undirected_adjacency(), source);
}

PathStats path_stats(const Graph& graph) {
  PathStats s;
  if (graph.node_count() == 0) return s;
  const auto adj = graph.undirected_adjacency();
  const auto comps = components_of(adj);
  const auto& giant = comps.members[comps.giant];
  s.component_count = comps.members.size();
  s.giant_component_size = giant.size();
  if (giant.size() < 2) return s;
  std::uint64_t sum = 0;
  for (std::size_t u : giant) {
    const auto dist = bfs(adj, u);
    for (std::size_t v : giant) {
      if (v <= u) continue;
      sum += dist[v];
      s.diameter = std::max(s.diameter, dist[v]);
    }
  }
  const double pairs = static_cast<double>(giant.size()) * static_cast<double>(giant.size() - 1) / 2.0;
  s.mean_shortest_path = static_cast<double>(sum) / pairs;
  return s;
}

MetricsReport metrics_report(const Graph& graph) {
  MetricsReport r;
  r.node_count = graph.node_count();
  r.link_count = graph.link_count();
  const auto deg = degree_stats(graph);
  r.mean_degree = deg.mean;
  r.max_degree = deg.max;
  const auto cl = clustering(graph);
  r.mean_clustering = cl.mean;
  r.max_clustering = cl.max;
  const auto ps = path_stats(graph);
  r.mean_shortest_path = ps.mean_shortest_path;
  r.diameter = ps.diameter;
  r.component_count = ps.component_count;
  r.giant_component_size = ps.giant_component_size;
  return r;
}

namespace {

std::vector<std::pair<std::string_view, std::string>> report_fields(const MetricsReport& r) {
  return {
      {"nodes", std::to_string(r.node_count)},
      {"links", std::to_string(r.link_count)},
      {"mean_degree", format_real(r.mean_degree)},
      {"max_degree", std::to_string(r.max_degree)},
      {"mean_clustering", format_real(r.mean_clustering)},
      {"max_clustering", format_real(r.max_clustering)},
      {"mean_path", format_real(r.mean_shortest_path)},
      {"diameter", std::to_string(r.diameter)},
      {"components", std::to_string(r.component_count)},
      {"giant_size", std::to_string(r.giant_component_size)},
  };
}

}  // namespace

std::string format_report_kv(const MetricsReport& report) {
  std::string out;
  for (const auto& [k, v] : report_fields(report)) {
    out.append(k);
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

std::string format_report_csv(const MetricsReport& report) {
  std::string out = "metric,value\n";
  for (const auto& [k, v] : report_fields(report)) {
    out.append(k);
    out += ',';
    out += v;
    out += '\n';
  }
  return out;
}

std::string format_distribution_csv(const DegreeDistribution& dist) {
  std::string out = "degree,count,fraction\n";
  for (const auto& [k, count] : dist.counts)
    out += std::to_string(k) + "," + std::to_string(count) + "," + format_real(dist.fraction(k)) + "\n";
  return out;
}

std::span<const EvolutionMetric> all_evolution_metrics() { return kMetrics; }

std::string_view metric_name(EvolutionMetric metric) {
  switch (metric) {
    case EvolutionMetric::NodeCount: return "node_count";
    case EvolutionMetric::LinkCount: return "link_count";
    case EvolutionMetric::MeanDegree: return "mean_degree";
    case EvolutionMetric::MeanClustering: return "mean_clustering";
    case EvolutionMetric::GiantComponentSize: return "giant_component_size";
    case EvolutionMetric::ComponentCount: return "component_count";
  }
  return "";
}

EvolutionMetric parse_metric(std::string_view name) {
  for (auto m : kMetrics)
    if (metric_name(m) == name) return m;
  std::string valid;
  for (auto m : kMetrics) {
    if (!valid.empty()) valid += ", ";
    valid += metric_name(m);
  }
  throw Error(ErrorKind::Usage, "unknown metric '" + std::string(name) + "'; valid metrics: " + valid);
}

double metric_value(const Graph& graph, EvolutionMetric metric) {
  switch (metric) {
    case EvolutionMetric::NodeCount: return static_cast<double>(graph.node_count());
    case EvolutionMetric::LinkCount: return static_cast<double>(graph.link_count());
    case EvolutionMetric::MeanDegree: return degree_stats(graph).mean;
    case EvolutionMetric::MeanClustering: return clustering(graph).mean;
    case EvolutionMetric::GiantComponentSize: {
      if (graph.node_count() == 0) return 0.0;
      auto c = connected_components(graph);
      return static_cast<double>(c.members[c.giant].size());
    }
    case EvolutionMetric::ComponentCount:
      return static_cast<double>(connected_components(graph).members.size());
  }
  return 0.0;
}

EvolutionSeries evolution_series(const Corpus& corpus, LayerSpec layer, EvolutionMetric metric) {
  EvolutionSeries series{layer, metric, {}};
  for (const auto& t : corpus.time_indexes())
    series.points.emplace_back(t, metric_value(build_layer(snapshot(corpus, t), layer), metric));
  return series;
}

std::string format_evolution_csv(const EvolutionSeries& series) {
  std::string out = "time,value\n";
  for (const auto& [t, v] : series.points) out += format_time_index(t) + "," + format_real(v) + "\n";
  return out;
}

}  // namespace journet

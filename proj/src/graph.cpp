#include "journet/graph.hpp"

#include <algorithm>
#include <set>

#include "journet/error.hpp"

namespace journet {

std::string_view node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Author: return "author";
    case NodeKind::Paper: return "paper";
    case NodeKind::Pacs: return "pacs";
    case NodeKind::Reference: return "reference";
  }
  return "unknown";
}

NodeRef NodeRef::author(std::int64_t id) { return {NodeKind::Author, std::to_string(id)}; }

std::strong_ordering NodeRef::operator<=>(const NodeRef& other) const {
  if (auto c = kind <=> other.kind; c != 0) return c;
  if (kind == NodeKind::Author) {
    // Canonical decimal: shorter means smaller.
    if (auto c = id.size() <=> other.id.size(); c != 0) return c;
  }
  return id.compare(other.id) <=> 0;
}

std::optional<std::size_t> Graph::index_of(const NodeRef& node) const {
  auto it = index_.find(node);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Weight Graph::weight(std::size_t i, std::size_t j) const {
  const auto& row = out_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Neighbor& n, std::size_t idx) { return n.index < idx; });
  return (it != row.end() && it->index == j) ? it->weight : 0;
}

std::vector<NodeKind> Graph::kinds() const {
  std::set<NodeKind> kinds;
  for (const auto& n : nodes_) kinds.insert(n.kind);
  return {kinds.begin(), kinds.end()};
}

Graph Graph::symmetrized() const {
  if (!directed_) return *this;
  GraphBuilder builder(false);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    builder.add_node(nodes_[i]);
    builder.set_aux(nodes_[i], aux_[i]);
    builder.set_label(nodes_[i], labels_[i]);
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (const auto& n : out_[i]) builder.add_link(nodes_[i], nodes_[n.index], n.weight);
  return builder.build();
}

std::vector<std::vector<std::size_t>> Graph::undirected_adjacency() const {
  std::vector<std::vector<std::size_t>> adj(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (const auto& n : out_[i]) adj[i].push_back(n.index);
    if (directed_)
      for (const auto& n : in_[i]) adj[i].push_back(n.index);
  }
  if (directed_) {
    for (auto& row : adj) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
  }
  return adj;
}

bool Graph::operator==(const Graph& other) const {
  return directed_ == other.directed_ && link_count_ == other.link_count_ &&
         nodes_ == other.nodes_ && out_ == other.out_;
}

void GraphBuilder::add_node(const NodeRef& node) { nodes_.try_emplace(node, 0, std::string()); }

void GraphBuilder::add_link(const NodeRef& from, const NodeRef& to, Weight weight) {
  if (from == to)
    throw Error(ErrorKind::Data, "self-loop on " + std::string(node_kind_name(from.kind)) + " " +
                                     from.id + " (" + from.id + ", " + to.id + ")");
  if (weight == 0)
    throw Error(ErrorKind::Data, "zero weight on link (" + from.id + ", " + to.id + ")");
  add_node(from);
  add_node(to);
  auto key = (directed_ || from < to) ? std::pair{from, to} : std::pair{to, from};
  links_[key] += weight;
}

void GraphBuilder::set_aux(const NodeRef& node, std::int64_t aux) {
  nodes_[node].first = aux;
}

void GraphBuilder::set_label(const NodeRef& node, std::string label) {
  nodes_[node].second = std::move(label);
}

Graph GraphBuilder::build() const {
  Graph g;
  g.directed_ = directed_;
  g.link_count_ = links_.size();
  g.nodes_.reserve(nodes_.size());
  for (const auto& [node, attrs] : nodes_) {
    g.index_.emplace(node, g.nodes_.size());
    g.nodes_.push_back(node);
    g.aux_.push_back(attrs.first);
    g.labels_.push_back(attrs.second);
  }
  g.out_.resize(g.nodes_.size());
  if (directed_) g.in_.resize(g.nodes_.size());
  // links_ iterates in (from, to) order, so every list below is filled sorted
  // except the reverse entries of undirected edges, which are sorted after.
  for (const auto& [ends, w] : links_) {
    std::size_t u = g.index_.at(ends.first);
    std::size_t v = g.index_.at(ends.second);
    g.out_[u].push_back({v, w});
    if (directed_) g.in_[v].push_back({u, w});
    else g.out_[v].push_back({u, w});
  }
  auto by_index = [](const Neighbor& a, const Neighbor& b) { return a.index < b.index; };
  for (auto& row : g.out_) std::sort(row.begin(), row.end(), by_index);
  for (auto& row : g.in_) std::sort(row.begin(), row.end(), by_index);
  return g;
}

Graph build_graph(bool directed, std::span<const Link> links, std::span<const NodeRef> isolated) {
  GraphBuilder builder(directed);
  for (const auto& n : isolated) builder.add_node(n);
  for (const auto& l : links) builder.add_link(l.from, l.to, l.weight);
  return builder.build();
}

std::vector<AdjacencyRow> adjacency_rows(const Graph& graph,
                                         const std::map<NodeRef, std::int64_t>* aux) {
  std::vector<AdjacencyRow> rows;
  rows.reserve(graph.node_count());
  auto adj = graph.undirected_adjacency();
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    AdjacencyRow row;
    row.node = graph.node(i);
    for (std::size_t j : adj[i]) row.neighbours.push_back(graph.node(j));
    row.degree = row.neighbours.size();
    if (aux) {
      auto it = aux->find(row.node);
      if (it == aux->end())
        throw Error(ErrorKind::Usage, "aux mapping lacks node " + row.node.id);
      row.aux_count = it->second;
    } else {
      row.aux_count = graph.aux(i);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace journet

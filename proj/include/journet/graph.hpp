#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace journet {

enum class NodeKind : std::uint8_t { Author = 0, Paper = 1, Pacs = 2, Reference = 3 };

std::string_view node_kind_name(NodeKind kind);

/// Identifies a node by kind and textual id.  Author ids are the decimal
/// rendering of the integer id and order numerically; every other kind orders
/// lexicographically.  Kinds order Author < Paper < Pacs < Reference.
struct NodeRef {
  NodeKind kind = NodeKind::Author;
  std::string id;

  static NodeRef author(std::int64_t id);
  static NodeRef paper(std::string id) { return {NodeKind::Paper, std::move(id)}; }
  static NodeRef pacs(std::string code) { return {NodeKind::Pacs, std::move(code)}; }
  static NodeRef reference(std::string key) {
    return {NodeKind::Reference, std::move(key)};
  }

  bool operator==(const NodeRef&) const = default;
  std::strong_ordering operator<=>(const NodeRef& other) const;
};

using Weight = std::uint64_t;

struct Link {
  NodeRef from;
  NodeRef to;
  Weight weight = 1;
};

struct Neighbor {
  std::size_t index;
  Weight weight;

  bool operator==(const Neighbor&) const = default;
};

/// Immutable graph on canonically ordered nodes.  Node i is nodes()[i]; each
/// adjacency list is sorted by neighbour index (and therefore by NodeRef).
/// Undirected graphs store every edge in both endpoint lists.
class Graph {
 public:
  Graph() = default;

  bool directed() const { return directed_; }
  std::size_t node_count() const { return nodes_.size(); }
  /// Edges for undirected graphs, arcs for directed ones.
  std::size_t link_count() const { return link_count_; }

  std::span<const NodeRef> nodes() const { return nodes_; }
  const NodeRef& node(std::size_t i) const { return nodes_[i]; }
  std::optional<std::size_t> index_of(const NodeRef& node) const;

  /// Out-neighbours (directed) or neighbours (undirected).
  std::span<const Neighbor> out(std::size_t i) const { return out_[i]; }
  /// In-neighbours; identical to out() for undirected graphs.
  std::span<const Neighbor> in(std::size_t i) const {
    return directed_ ? std::span<const Neighbor>(in_[i]) : out(i);
  }

  /// Weight of link i->j (or edge {i,j}), 0 when absent.
  Weight weight(std::size_t i, std::size_t j) const;

  /// Per-node auxiliary count; 0 by default.
  std::int64_t aux(std::size_t i) const { return aux_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  /// Kinds present, ascending.
  std::vector<NodeKind> kinds() const;

  /// Undirected view with the same nodes; an edge exists where either arc
  /// exists and carries the summed weight of both directions.
  Graph symmetrized() const;

  /// Simple topology view: per node, sorted distinct neighbour indexes,
  /// ignoring direction and weights.
  std::vector<std::vector<std::size_t>> undirected_adjacency() const;

  /// Structural equality: direction, node set, links and weights.  Node
  /// attributes (aux count, label) are not compared.
  bool operator==(const Graph& other) const;

 private:
  friend class GraphBuilder;

  bool directed_ = false;
  std::size_t link_count_ = 0;
  std::vector<NodeRef> nodes_;
  std::map<NodeRef, std::size_t> index_;
  std::vector<std::vector<Neighbor>> out_;
  std::vector<std::vector<Neighbor>> in_;
  std::vector<std::int64_t> aux_;
  std::vector<std::string> labels_;
};

/// Accumulates nodes and links, then produces a canonical Graph.  Repeated
/// links aggregate by weight summation; for undirected graphs (u,v) and (v,u)
/// are the same link.
class GraphBuilder {
 public:
  explicit GraphBuilder(bool directed) : directed_(directed) {}

  void add_node(const NodeRef& node);
  /// Throws Error{Data} on a self-loop or a zero weight.
  void add_link(const NodeRef& from, const NodeRef& to, Weight weight = 1);
  void set_aux(const NodeRef& node, std::int64_t aux);
  void set_label(const NodeRef& node, std::string label);

  Graph build() const;

 private:
  bool directed_;
  std::map<NodeRef, std::pair<std::int64_t, std::string>> nodes_;
  std::map<std::pair<NodeRef, NodeRef>, Weight> links_;
};

/// Builds a graph from a link list plus explicitly declared isolated nodes.
Graph build_graph(bool directed, std::span<const Link> links,
                  std::span<const NodeRef> isolated = {});

struct AdjacencyRow {
  NodeRef node;
  std::vector<NodeRef> neighbours;
  std::size_t degree = 0;
  std::int64_t aux_count = 0;

  bool operator==(const AdjacencyRow&) const = default;
};

/// One row per node in canonical order.  For directed graphs the neighbour
/// list is the union of in- and out-neighbours.  When aux is given it must
/// cover every node (Error{Usage} otherwise); when absent the graph's own
/// aux counts are used.
std::vector<AdjacencyRow> adjacency_rows(
    const Graph& graph,
    const std::map<NodeRef, std::int64_t>* aux = nullptr);

}  // namespace journet

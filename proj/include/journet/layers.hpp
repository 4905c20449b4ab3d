#pragma once

// The journal's network catalogue.  Every layer is derived from a Corpus,
// either directly or as a one-mode projection of a bipartite relation.

#include <span>
#include <string_view>
#include <vector>

#include "journet/corpus.hpp"
#include "journet/graph.hpp"

namespace journet {

enum class LayerSpec {
  CoAuthorship,
  PaperCommonAuthor,
  PaperCitation,
  PaperCommonPacs,
  CoCitation,
  BibliographicCoupling,
  AuthorCommonPacs,
  BipartiteAuthorPaper,
  BipartitePaperPacs,
  BipartitePaperReference,
};

std::span<const LayerSpec> all_layers();
std::string_view layer_token(LayerSpec spec);
/// Throws Error{Usage} listing every valid token.
LayerSpec parse_layer(std::string_view token);

bool layer_is_directed(LayerSpec spec);

/// Reads a user-supplied node id: digits are an author, "vVnIpS" a paper, a
/// PACS-shaped code a PACS node, anything else a (normalized) reference key.
NodeRef infer_node_ref(std::string_view token);
/// Node kinds a layer contains, ascending.
std::vector<NodeKind> layer_node_kinds(LayerSpec spec);

enum class BipartiteKind { AuthorPaper, PaperPacs, PaperReference };

/// The (left, right) node kinds of a bipartite relation.
std::pair<NodeKind, NodeKind> bipartite_sides(BipartiteKind kind);

/// Undirected graph with links only between the two sides of `kind`.  Every
/// corpus entity on either side is a node, linked or not.
Graph build_bipartite(const Corpus& corpus, BipartiteKind kind);

enum class Side { Left, Right };

/// Nodes of kind `keep` connected when they share at least one counterpart;
/// weight = number of shared counterparts.  Throws Error{Data} when the input
/// has an intra-kind link.
Graph project_one_mode(const Graph& bipartite, NodeKind keep);
Graph project_one_mode(const Graph& bipartite, BipartiteKind kind, Side side);

struct LayerOptions {
  /// CoCitation only: keep cited works that are journal papers.
  bool internal_only_cocitation = false;
};

Graph build_layer(const Corpus& corpus, LayerSpec spec, LayerOptions options = {});

}  // namespace journet

#include "journet/layers.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "journet/error.hpp"

namespace journet {

namespace {

constexpr std::array kLayers = {
    LayerSpec::CoAuthorship,         LayerSpec::PaperCommonAuthor,
    LayerSpec::PaperCitation,        LayerSpec::PaperCommonPacs,
    LayerSpec::CoCitation,           LayerSpec::BibliographicCoupling,
    LayerSpec::AuthorCommonPacs,     LayerSpec::BipartiteAuthorPaper,
    LayerSpec::BipartitePaperPacs,   LayerSpec::BipartitePaperReference,
};

void add_papers(GraphBuilder& b, const Corpus& corpus) {
  for (const auto& [id, p] : corpus.papers()) {
    NodeRef n = NodeRef::paper(id);
    b.add_node(n);
    b.set_label(n, p.title);
    b.set_aux(n, static_cast<std::int64_t>(p.author_ids.size()));
  }
}

void add_authors(GraphBuilder& b, const Corpus& corpus) {
  const auto& by_author = corpus.indexes().papers_by_author;
  for (const auto& [id, a] : corpus.authors()) {
    NodeRef n = NodeRef::author(id);
    b.add_node(n);
    b.set_label(n, a.name);
    auto it = by_author.find(id);
    b.set_aux(n, it == by_author.end() ? 0 : static_cast<std::int64_t>(it->second.size()));
  }
}

Graph author_pacs_bipartite(const Corpus& corpus) {
  GraphBuilder b(false);
  add_authors(b, corpus);
  for (const auto& [code, _] : corpus.indexes().papers_by_pacs) b.add_node(NodeRef::pacs(code));
  for (const auto& [author, papers] : corpus.indexes().papers_by_author) {
    std::set<std::string> codes;
    for (const auto& pid : papers)
      if (const auto* p = corpus.find_paper(pid)) codes.insert(p->pacs_codes.begin(), p->pacs_codes.end());
    for (const auto& code : codes) b.add_link(NodeRef::author(author), NodeRef::pacs(code));
  }
  return b.build();
}

Graph citation_layer(const Corpus& corpus) {
  GraphBuilder b(true);
  add_papers(b, corpus);
  for (const auto& [id, p] : corpus.papers())
    for (const auto& ref : p.reference_keys)
      if (ref.internal_paper_id) b.add_link(NodeRef::paper(id), NodeRef::paper(*ref.internal_paper_id));
  return b.build();
}

Graph cocitation_layer(const Corpus& corpus, bool internal_only) {
  GraphBuilder b(false);
  for (const auto& [_, p] : corpus.papers()) {
    std::vector<const ReferenceKey*> refs;
    for (const auto& ref : p.reference_keys)
      if (!internal_only || ref.internal_paper_id) refs.push_back(&ref);
    for (const auto* r : refs) b.add_node(NodeRef::reference(r->key));
    for (std::size_t i = 0; i < refs.size(); ++i)
      for (std::size_t j = i + 1; j < refs.size(); ++j)
        b.add_link(NodeRef::reference(refs[i]->key), NodeRef::reference(refs[j]->key));
  }
  return b.build();
}

Graph coupling_layer(const Corpus& corpus) {
  GraphBuilder b(false);
  add_papers(b, corpus);
  for (const auto& [_, citing] : corpus.indexes().citing_papers_by_reference)
    for (std::size_t i = 0; i < citing.size(); ++i)
      for (std::size_t j = i + 1; j < citing.size(); ++j)
        b.add_link(NodeRef::paper(citing[i]), NodeRef::paper(citing[j]));
  return b.build();
}

}  // namespace

std::span<const LayerSpec> all_layers() { return kLayers; }

std::string_view layer_token(LayerSpec spec) {
  switch (spec) {
    case LayerSpec::CoAuthorship: return "coauthorship";
    case LayerSpec::PaperCommonAuthor: return "paper-common-author";
    case LayerSpec::PaperCitation: return "paper-citation";
    case LayerSpec::PaperCommonPacs: return "paper-common-pacs";
    case LayerSpec::CoCitation: return "cocitation";
    case LayerSpec::BibliographicCoupling: return "coupling";
    case LayerSpec::AuthorCommonPacs: return "author-common-pacs";
    case LayerSpec::BipartiteAuthorPaper: return "bipartite-author-paper";
    case LayerSpec::BipartitePaperPacs: return "bipartite-paper-pacs";
    case LayerSpec::BipartitePaperReference: return "bipartite-paper-reference";
  }
  return "";
}

LayerSpec parse_layer(std::string_view token) {
  for (LayerSpec spec : kLayers)
    if (layer_token(spec) == token) return spec;
  std::string valid;
  for (LayerSpec spec : kLayers) {
    if (!valid.empty()) valid += ", ";
    valid += layer_token(spec);
  }
  throw Error(ErrorKind::Usage, "unknown layer '" + std::string(token) + "'; valid layers: " + valid);
}

bool layer_is_directed(LayerSpec spec) { return spec == LayerSpec::PaperCitation; }

NodeRef infer_node_ref(std::string_view token) {
  if (!token.empty() && token.size() < 19 &&
      token.find_first_not_of("0123456789") == std::string_view::npos)
    return NodeRef::author(std::stoll(std::string(token)));
  if (parse_paper_id(token)) return NodeRef::paper(std::string(token));
  if (is_valid_pacs(token)) return NodeRef::pacs(std::string(token));
  return NodeRef::reference(normalize_reference_key(token));
}

std::vector<NodeKind> layer_node_kinds(LayerSpec spec) {
  switch (spec) {
    case LayerSpec::CoAuthorship:
    case LayerSpec::AuthorCommonPacs: return {NodeKind::Author};
    case LayerSpec::PaperCommonAuthor:
    case LayerSpec::PaperCitation:
    case LayerSpec::PaperCommonPacs:
    case LayerSpec::BibliographicCoupling: return {NodeKind::Paper};
    case LayerSpec::CoCitation: return {NodeKind::Reference};
    case LayerSpec::BipartiteAuthorPaper: return {NodeKind::Author, NodeKind::Paper};
    case LayerSpec::BipartitePaperPacs: return {NodeKind::Paper, NodeKind::Pacs};
    case LayerSpec::BipartitePaperReference: return {NodeKind::Paper, NodeKind::Reference};
  }
  return {};
}

std::pair<NodeKind, NodeKind> bipartite_sides(BipartiteKind kind) {
  switch (kind) {
    case BipartiteKind::AuthorPaper: return {NodeKind::Author, NodeKind::Paper};
    case BipartiteKind::PaperPacs: return {NodeKind::Paper, NodeKind::Pacs};
    case BipartiteKind::PaperReference: return {NodeKind::Paper, NodeKind::Reference};
  }
  return {};
}

Graph build_bipartite(const Corpus& corpus, BipartiteKind kind) {
  GraphBuilder b(false);
  switch (kind) {
    case BipartiteKind::AuthorPaper:
      add_authors(b, corpus);
      add_papers(b, corpus);
      for (const auto& [id, p] : corpus.papers())
        for (AuthorId a : p.author_ids) b.add_link(NodeRef::author(a), NodeRef::paper(id));
      break;
    case BipartiteKind::PaperPacs:
      add_papers(b, corpus);
      for (const auto& [id, p] : corpus.papers())
        for (const auto& code : p.pacs_codes) b.add_link(NodeRef::paper(id), NodeRef::pacs(code));
      break;
    case BipartiteKind::PaperReference:
      add_papers(b, corpus);
      for (const auto& [id, p] : corpus.papers())
        for (const auto& ref : p.reference_keys)
          b.add_link(NodeRef::paper(id), NodeRef::reference(ref.key));
      break;
  }
  return b.build();
}

Graph project_one_mode(const Graph& bipartite, NodeKind keep) {
  if (bipartite.directed())
    throw Error(ErrorKind::Usage, "one-mode projection needs an undirected bipartite graph");
  if (bipartite.kinds().size() > 2)
    throw Error(ErrorKind::Data, "graph has more than two node kinds");
  const std::size_t n = bipartite.node_count();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& nb : bipartite.out(i))
      if (bipartite.node(nb.index).kind == bipartite.node(i).kind)
        throw Error(ErrorKind::Data, "intra-kind link " + bipartite.node(i).id + " - " +
                                         bipartite.node(nb.index).id);

  GraphBuilder b(false);
  std::vector<Weight> shared(n, 0);
  std::vector<std::size_t> touched;
  for (std::size_t u = 0; u < n; ++u) {
    if (bipartite.node(u).kind != keep) continue;
    b.add_node(bipartite.node(u));
    b.set_aux(bipartite.node(u), bipartite.aux(u));
    b.set_label(bipartite.node(u), bipartite.label(u));
    for (const auto& counterpart : bipartite.out(u)) {
      for (const auto& v : bipartite.out(counterpart.index)) {
        if (v.index <= u) continue;
        if (shared[v.index]++ == 0) touched.push_back(v.index);
      }
    }
    for (std::size_t v : touched) {
      b.add_link(bipartite.node(u), bipartite.node(v), shared[v]);
      shared[v] = 0;
    }
    touched.clear();
  }
  return b.build();
}

Graph project_one_mode(const Graph& bipartite, BipartiteKind kind, Side side) {
  auto [left, right] = bipartite_sides(kind);
  return project_one_mode(bipartite, side == Side::Left ? left : right);
}

Graph build_layer(const Corpus& corpus, LayerSpec spec, LayerOptions options) {
  switch (spec) {
    case LayerSpec::CoAuthorship:
      return project_one_mode(build_bipartite(corpus, BipartiteKind::AuthorPaper), NodeKind::Author);
    case LayerSpec::PaperCommonAuthor:
      return project_one_mode(build_bipartite(corpus, BipartiteKind::AuthorPaper), NodeKind::Paper);
    case LayerSpec::PaperCommonPacs:
      return project_one_mode(build_bipartite(corpus, BipartiteKind::PaperPacs), NodeKind::Paper);
    case LayerSpec::AuthorCommonPacs:
      return project_one_mode(author_pacs_bipartite(corpus), NodeKind::Author);
    case LayerSpec::PaperCitation: return citation_layer(corpus);
    case LayerSpec::CoCitation: return cocitation_layer(corpus, options.internal_only_cocitation);
    case LayerSpec::BibliographicCoupling: return coupling_layer(corpus);
    case LayerSpec::BipartiteAuthorPaper: return build_bipartite(corpus, BipartiteKind::AuthorPaper);
    case LayerSpec::BipartitePaperPacs: return build_bipartite(corpus, BipartiteKind::PaperPacs);
    case LayerSpec::BipartitePaperReference:
      return build_bipartite(corpus, BipartiteKind::PaperReference);
  }
  throw Error(ErrorKind::Usage, "unknown layer");
}

}  // namespace journet

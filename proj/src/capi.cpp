#include "journet/journet.h"

#include <exception>
#include <new>
#include <string>

#include "journet/communities.hpp"
#include "journet/corpus.hpp"
#include "journet/error.hpp"
#include "journet/io.hpp"
#include "journet/layers.hpp"
#include "journet/metrics.hpp"
#include "journet/retrieval.hpp"

struct jn_corpus {
  journet::Corpus corpus;
};

struct jn_graph {
  journet::Graph graph;
};

struct jn_text {
  std::string data;
};

namespace {

thread_local std::string last_error;

jn_status status_of(journet::ErrorKind kind) {
  switch (kind) {
    case journet::ErrorKind::Usage: return JN_ERR_USAGE;
    case journet::ErrorKind::Data: return JN_ERR_DATA;
    case journet::ErrorKind::Io: return JN_ERR_IO;
    case journet::ErrorKind::Format: return JN_ERR_FORMAT;
    case journet::ErrorKind::NotFound: return JN_ERR_NOT_FOUND;
  }
  return JN_ERR_INTERNAL;
}

template <typename Fn>
jn_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return JN_OK;
  } catch (const journet::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return JN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return JN_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw journet::Error(journet::ErrorKind::Usage, std::string(what) + " is null");
}

jn_text* make_text(std::string s) { return new jn_text{std::move(s)}; }

std::vector<journet::LayerSpec> parse_layer_list(std::string_view list) {
  std::vector<journet::LayerSpec> specs;
  std::size_t start = 0;
  for (;;) {
    auto pos = list.find(',', start);
    auto token = list.substr(start, pos == std::string_view::npos ? pos : pos - start);
    specs.push_back(journet::parse_layer(token));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return specs;
}

}  // namespace

extern "C" {

const char* jn_version(void) { return "1.0.0"; }

const char* jn_last_error(void) { return last_error.c_str(); }

const char* jn_status_name(jn_status status) {
  switch (status) {
    case JN_OK: return "ok";
    case JN_ERR_USAGE: return "usage error";
    case JN_ERR_DATA: return "data error";
    case JN_ERR_IO: return "i/o error";
    case JN_ERR_FORMAT: return "format error";
    case JN_ERR_NOT_FOUND: return "not found";
    case JN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* jn_text_data(const jn_text* text) { return text ? text->data.c_str() : ""; }
size_t jn_text_size(const jn_text* text) { return text ? text->data.size() : 0; }
void jn_text_free(jn_text* text) { delete text; }

jn_status jn_corpus_ingest(const char* papers, const char* authors, const char* authorship,
                           const char* references, const char* affiliations, jn_corpus** out) {
  return guarded([&] {
    require(papers, "papers");
    require(authors, "authors");
    require(authorship, "authorship");
    require(references, "references");
    require(out, "out");
    journet::CorpusFiles files{papers, authors, authorship, references, std::nullopt};
    if (affiliations) files.affiliations = affiliations;
    *out = new jn_corpus{journet::ingest_corpus(files)};
  });
}

jn_status jn_corpus_load(const char* path, jn_corpus** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new jn_corpus{journet::load_corpus(path)};
  });
}

jn_status jn_corpus_save(const jn_corpus* corpus, const char* path) {
  return guarded([&] {
    require(corpus, "corpus");
    require(path, "path");
    journet::persist_corpus(corpus->corpus, path);
  });
}

jn_status jn_corpus_snapshot(const jn_corpus* corpus, const char* as_of, jn_corpus** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(as_of, "as_of");
    require(out, "out");
    *out = new jn_corpus{journet::snapshot(corpus->corpus, journet::parse_time_index(as_of))};
  });
}

jn_status jn_corpus_counts(const jn_corpus* corpus, size_t* papers, size_t* authors,
                           size_t* affiliations) {
  return guarded([&] {
    require(corpus, "corpus");
    if (papers) *papers = corpus->corpus.papers().size();
    if (authors) *authors = corpus->corpus.authors().size();
    if (affiliations) *affiliations = corpus->corpus.affiliations().size();
  });
}

jn_status jn_corpus_validate(const jn_corpus* corpus, size_t* violations, jn_text** report) {
  return guarded([&] {
    require(corpus, "corpus");
    auto r = journet::validate_corpus(corpus->corpus);
    if (violations) *violations = r.violations.size();
    if (report) {
      std::string text;
      for (const auto& v : r.violations) text += v.kind + " " + v.subject + " " + v.detail + "\n";
      *report = make_text(std::move(text));
    }
  });
}

void jn_corpus_free(jn_corpus* corpus) { delete corpus; }

jn_status jn_graph_build_layer(const jn_corpus* corpus, const char* layer, jn_graph** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(layer, "layer");
    require(out, "out");
    *out = new jn_graph{journet::build_layer(corpus->corpus, journet::parse_layer(layer))};
  });
}

jn_status jn_graph_counts(const jn_graph* graph, size_t* nodes, size_t* links, int* directed) {
  return guarded([&] {
    require(graph, "graph");
    if (nodes) *nodes = graph->graph.node_count();
    if (links) *links = graph->graph.link_count();
    if (directed) *directed = graph->graph.directed() ? 1 : 0;
  });
}

void jn_graph_free(jn_graph* graph) { delete graph; }

jn_status jn_graph_metrics(const jn_graph* graph, jn_metrics* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    auto r = journet::metrics_report(graph->graph);
    *out = jn_metrics{r.node_count,      r.link_count,         r.mean_degree,
                      r.max_degree,      r.mean_clustering,    r.max_clustering,
                      r.mean_shortest_path, r.diameter,        r.component_count,
                      r.giant_component_size};
  });
}

jn_status jn_graph_metrics_text(const jn_graph* graph, const char* format, jn_text** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    std::string_view fmt = format ? format : "kv";
    if (fmt != "kv" && fmt != "csv")
      throw journet::Error(journet::ErrorKind::Usage,
                           "unknown format '" + std::string(fmt) + "'; valid formats: kv, csv");
    auto r = journet::metrics_report(graph->graph);
    *out = make_text(fmt == "kv" ? journet::format_report_kv(r) : journet::format_report_csv(r));
  });
}

jn_status jn_graph_distribution_csv(const jn_graph* graph, jn_text** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = make_text(journet::format_distribution_csv(journet::degree_stats(graph->graph).distribution));
  });
}

jn_status jn_graph_communities(const jn_graph* graph, const char* node, int dump_dendrogram,
                               jn_text** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    auto result = journet::girvan_newman(graph->graph);
    std::string text;
    if (dump_dendrogram) text += journet::format_dendrogram(result);
    if (node) {
      const auto members = journet::community_of(result, journet::infer_node_ref(node));
      text += "node_id\n";
      for (const auto& m : members) text += journet::csv_field(m.id) + "\n";
    } else {
      text += journet::format_partition_csv(result);
    }
    *out = make_text(std::move(text));
  });
}

jn_status jn_graph_neighbors_csv(const jn_graph* graph, const char* node, uint32_t depth,
                                 jn_text** out) {
  return guarded([&] {
    require(graph, "graph");
    require(node, "node");
    require(out, "out");
    auto r = journet::neighborhood(graph->graph, journet::infer_node_ref(node), depth);
    *out = make_text(journet::format_neighborhood_csv(r));
  });
}

jn_status jn_corpus_overlap_csv(const jn_corpus* corpus, const char* node, const char* layers,
                                jn_text** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(node, "node");
    require(layers, "layers");
    require(out, "out");
    auto specs = parse_layer_list(layers);
    auto r = journet::layer_overlap(corpus->corpus, journet::infer_node_ref(node), specs);
    *out = make_text(journet::format_overlap_csv(r));
  });
}

jn_status jn_corpus_rank_csv(const jn_corpus* corpus, const char* node, const char* layers,
                             jn_text** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(node, "node");
    require(layers, "layers");
    require(out, "out");
    auto specs = parse_layer_list(layers);
    auto r = journet::related_rank(corpus->corpus, journet::infer_node_ref(node), specs);
    *out = make_text(journet::format_rank_csv(r));
  });
}

jn_status jn_corpus_evolution_csv(const jn_corpus* corpus, const char* layer, const char* metric,
                                  jn_text** out) {
  return guarded([&] {
    require(corpus, "corpus");
    require(layer, "layer");
    require(metric, "metric");
    require(out, "out");
    auto series = journet::evolution_series(corpus->corpus, journet::parse_layer(layer),
                                            journet::parse_metric(metric));
    *out = make_text(journet::format_evolution_csv(series));
  });
}

jn_status jn_graph_export(const jn_graph* graph, const char* format, jn_text** out) {
  return guarded([&] {
    require(graph, "graph");
    require(format, "format");
    require(out, "out");
    std::string_view fmt = format;
    if (fmt == "pajek") *out = make_text(journet::export_pajek(graph->graph));
    else if (fmt == "adjacency") *out = make_text(journet::export_adjacency_report(graph->graph));
    else
      throw journet::Error(journet::ErrorKind::Usage,
                           "unknown export format '" + std::string(fmt) + "'; valid formats: pajek, adjacency");
  });
}

}  // extern "C"

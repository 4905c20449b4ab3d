// journet command-line front end.  Every subcommand is a thin binding over
// the C interface in journet/journet.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "journet/journet.h"

namespace {

constexpr int kUsageExit = 1;
constexpr int kDataExit = 2;

struct CorpusDeleter {
  void operator()(jn_corpus* c) const { jn_corpus_free(c); }
};
struct GraphDeleter {
  void operator()(jn_graph* g) const { jn_graph_free(g); }
};
struct TextDeleter {
  void operator()(jn_text* t) const { jn_text_free(t); }
};

using CorpusPtr = std::unique_ptr<jn_corpus, CorpusDeleter>;
using GraphPtr = std::unique_ptr<jn_graph, GraphDeleter>;
using TextPtr = std::unique_ptr<jn_text, TextDeleter>;

// Carries a C status out of a subcommand.
struct Failure {
  jn_status status;
};

void check(jn_status s) {
  if (s != JN_OK) {
    std::cerr << "journet: " << jn_status_name(s) << ": " << jn_last_error() << "\n";
    throw Failure{s};
  }
}

CorpusPtr load(const std::string& path) {
  jn_corpus* c = nullptr;
  check(jn_corpus_load(path.c_str(), &c));
  return CorpusPtr(c);
}

GraphPtr layer(const jn_corpus* corpus, const std::string& token) {
  jn_graph* g = nullptr;
  check(jn_graph_build_layer(corpus, token.c_str(), &g));
  return GraphPtr(g);
}

void emit(jn_text* raw, const std::optional<std::string>& out_path) {
  TextPtr text(raw);
  if (!out_path) {
    std::cout.write(jn_text_data(text.get()), static_cast<std::streamsize>(jn_text_size(text.get())));
    std::cout.flush();
    return;
  }
  std::ofstream out(*out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "journet: cannot write " << *out_path << "\n";
    throw Failure{JN_ERR_IO};
  }
  out.write(jn_text_data(text.get()), static_cast<std::streamsize>(jn_text_size(text.get())));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"journet: bibliometric network construction and analysis"};
  app.require_subcommand(1);

  std::string corpus_path, layer_token, node, layers, metric, format, out_path;
  std::string papers, authors, links, refs, affils, as_of;
  unsigned depth = 1;
  bool dendrogram = false;

  auto* ingest = app.add_subcommand("ingest", "Read CSV metadata and write a corpus file");
  ingest->add_option("--papers", papers, "papers.csv")->required();
  ingest->add_option("--authors", authors, "authors.csv")->required();
  ingest->add_option("--links", links, "authorship.csv")->required();
  ingest->add_option("--refs", refs, "references.csv")->required();
  ingest->add_option("--affils", affils, "affiliations.csv");
  ingest->add_option("--out", out_path, "Corpus file to write")->required();

  auto* stats = app.add_subcommand("stats", "Network statistics for one layer");
  stats->add_option("--corpus", corpus_path)->required();
  stats->add_option("--layer", layer_token)->required();
  stats->add_option("--as-of", as_of, "Restrict to papers up to volume/issue vVnI");
  stats->add_option("--format", format, "kv or csv")->default_val("kv");

  auto* distribution = app.add_subcommand("distribution", "Degree distribution as CSV");
  distribution->add_option("--corpus", corpus_path)->required();
  distribution->add_option("--layer", layer_token)->required();
  distribution->add_option("--out", out_path)->required();

  auto* communities = app.add_subcommand("communities", "Girvan-Newman communities");
  communities->add_option("--corpus", corpus_path)->required();
  communities->add_option("--layer", layer_token)->required();
  communities->add_option("--node", node, "Print only this node's community");
  communities->add_flag("--dump-dendrogram", dendrogram, "Print every recorded split");

  auto* neighbors = app.add_subcommand("neighbors", "Neighbourhood of a node up to a depth");
  neighbors->add_option("--corpus", corpus_path)->required();
  neighbors->add_option("--layer", layer_token)->required();
  neighbors->add_option("--node", node)->required();
  neighbors->add_option("--depth", depth)->required()->check(CLI::PositiveNumber);

  auto* overlap = app.add_subcommand("overlap", "Neighbours shared across layers");
  overlap->add_option("--corpus", corpus_path)->required();
  overlap->add_option("--node", node)->required();
  overlap->add_option("--layers", layers, "Comma-separated layer tokens")->required();

  auto* rank = app.add_subcommand("rank", "Rank related nodes across layers");
  rank->add_option("--corpus", corpus_path)->required();
  rank->add_option("--node", node)->required();
  rank->add_option("--layers", layers, "Comma-separated layer tokens")->required();

  auto* evolution = app.add_subcommand("evolution", "Metric over cumulative issues");
  evolution->add_option("--corpus", corpus_path)->required();
  evolution->add_option("--layer", layer_token)->required();
  evolution->add_option("--metric", metric)->required();
  evolution->add_option("--out", out_path)->required();

  auto* exporter = app.add_subcommand("export", "Write a layer as Pajek or adjacency report");
  exporter->add_option("--corpus", corpus_path)->required();
  exporter->add_option("--layer", layer_token)->required();
  exporter->add_option("--format", format, "pajek or adjacency")->required();
  exporter->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "journet: " << e.what() << "\n\n" << app.help();
    return kUsageExit;
  }

  try {
    jn_text* text = nullptr;
    if (*ingest) {
      jn_corpus* raw = nullptr;
      check(jn_corpus_ingest(papers.c_str(), authors.c_str(), links.c_str(), refs.c_str(),
                             affils.empty() ? nullptr : affils.c_str(), &raw));
      CorpusPtr corpus(raw);
      check(jn_corpus_save(corpus.get(), out_path.c_str()));
      size_t np = 0, na = 0, nf = 0;
      check(jn_corpus_counts(corpus.get(), &np, &na, &nf));
      std::cerr << "ingested " << np << " papers, " << na << " authors, " << nf << " affiliations\n";
    } else if (*stats) {
      auto corpus = load(corpus_path);
      if (!as_of.empty()) {
        jn_corpus* snap = nullptr;
        check(jn_corpus_snapshot(corpus.get(), as_of.c_str(), &snap));
        corpus.reset(snap);
      }
      auto graph = layer(corpus.get(), layer_token);
      check(jn_graph_metrics_text(graph.get(), format.c_str(), &text));
      emit(text, std::nullopt);
    } else if (*distribution) {
      auto corpus = load(corpus_path);
      auto graph = layer(corpus.get(), layer_token);
      check(jn_graph_distribution_csv(graph.get(), &text));
      emit(text, out_path);
    } else if (*communities) {
      auto corpus = load(corpus_path);
      auto graph = layer(corpus.get(), layer_token);
      check(jn_graph_communities(graph.get(), node.empty() ? nullptr : node.c_str(),
                                 dendrogram ? 1 : 0, &text));
      emit(text, std::nullopt);
    } else if (*neighbors) {
      auto corpus = load(corpus_path);
      auto graph = layer(corpus.get(), layer_token);
      check(jn_graph_neighbors_csv(graph.get(), node.c_str(), depth, &text));
      emit(text, std::nullopt);
    } else if (*overlap) {
      auto corpus = load(corpus_path);
      check(jn_corpus_overlap_csv(corpus.get(), node.c_str(), layers.c_str(), &text));
      emit(text, std::nullopt);
    } else if (*rank) {
      auto corpus = load(corpus_path);
      check(jn_corpus_rank_csv(corpus.get(), node.c_str(), layers.c_str(), &text));
      emit(text, std::nullopt);
    } else if (*evolution) {
      auto corpus = load(corpus_path);
      check(jn_corpus_evolution_csv(corpus.get(), layer_token.c_str(), metric.c_str(), &text));
      emit(text, out_path);
    } else if (*exporter) {
      auto corpus = load(corpus_path);
      auto graph = layer(corpus.get(), layer_token);
      check(jn_graph_export(graph.get(), format.c_str(), &text));
      emit(text, out_path);
    }
  } catch (const Failure& f) {
    return f.status == JN_ERR_USAGE ? kUsageExit : kDataExit;
  }
  return 0;
}

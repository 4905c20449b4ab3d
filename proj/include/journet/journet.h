/*
 * C interface to the journet library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function.  Every fallible call returns a jn_status; on
 * failure the message is available from jn_last_error() until the next call
 * on the same thread.  Text results are returned as jn_text handles.
 */
#ifndef JOURNET_JOURNET_H
#define JOURNET_JOURNET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(JOURNET_BUILDING)
#    define JN_API __declspec(dllexport)
#  else
#    define JN_API __declspec(dllimport)
#  endif
#else
#  define JN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jn_status {
  JN_OK = 0,
  JN_ERR_USAGE = 1,     /* bad argument, unknown layer/metric/format token */
  JN_ERR_DATA = 2,      /* malformed or inconsistent input data */
  JN_ERR_IO = 3,        /* file cannot be read or written */
  JN_ERR_FORMAT = 4,    /* persisted corpus has wrong header/version */
  JN_ERR_NOT_FOUND = 5, /* node not present in the graph */
  JN_ERR_INTERNAL = 6
} jn_status;

typedef struct jn_corpus jn_corpus;
typedef struct jn_graph jn_graph;
typedef struct jn_text jn_text;

typedef struct jn_metrics {
  uint64_t nodes;
  uint64_t links;
  double mean_degree;
  uint64_t max_degree;
  double mean_clustering;
  double max_clustering;
  double mean_path;
  uint64_t diameter;
  uint64_t components;
  uint64_t giant_size;
} jn_metrics;

JN_API const char* jn_version(void);
JN_API const char* jn_last_error(void);
JN_API const char* jn_status_name(jn_status status);

/* Text buffers. */
JN_API const char* jn_text_data(const jn_text* text);
JN_API size_t jn_text_size(const jn_text* text);
JN_API void jn_text_free(jn_text* text);

/* Corpus.  affiliations may be NULL. */
JN_API jn_status jn_corpus_ingest(const char* papers, const char* authors,
                                  const char* authorship, const char* references,
                                  const char* affiliations, jn_corpus** out);
JN_API jn_status jn_corpus_load(const char* path, jn_corpus** out);
JN_API jn_status jn_corpus_save(const jn_corpus* corpus, const char* path);
/* as_of is a "vVnI" token. */
JN_API jn_status jn_corpus_snapshot(const jn_corpus* corpus, const char* as_of,
                                    jn_corpus** out);
JN_API jn_status jn_corpus_counts(const jn_corpus* corpus, size_t* papers,
                                  size_t* authors, size_t* affiliations);
/* Number of violations found by a full validation pass; details in text form. */
JN_API jn_status jn_corpus_validate(const jn_corpus* corpus, size_t* violations,
                                    jn_text** report);
JN_API void jn_corpus_free(jn_corpus* corpus);

/* Graphs.  layer is a token such as "coauthorship" or "paper-citation". */
JN_API jn_status jn_graph_build_layer(const jn_corpus* corpus, const char* layer,
                                      jn_graph** out);
JN_API jn_status jn_graph_counts(const jn_graph* graph, size_t* nodes, size_t* links,
                                 int* directed);
JN_API void jn_graph_free(jn_graph* graph);

/* Statistics.  format is "kv" or "csv". */
JN_API jn_status jn_graph_metrics(const jn_graph* graph, jn_metrics* out);
JN_API jn_status jn_graph_metrics_text(const jn_graph* graph, const char* format,
                                       jn_text** out);
JN_API jn_status jn_graph_distribution_csv(const jn_graph* graph, jn_text** out);

/* Girvan-Newman communities.  node may be NULL (full partition). */
JN_API jn_status jn_graph_communities(const jn_graph* graph, const char* node,
                                      int dump_dendrogram, jn_text** out);

/* Retrieval.  layers is a comma-separated token list. */
JN_API jn_status jn_graph_neighbors_csv(const jn_graph* graph, const char* node,
                                        uint32_t depth, jn_text** out);
JN_API jn_status jn_corpus_overlap_csv(const jn_corpus* corpus, const char* node,
                                       const char* layers, jn_text** out);
JN_API jn_status jn_corpus_rank_csv(const jn_corpus* corpus, const char* node,
                                    const char* layers, jn_text** out);

/* Evolution of one metric over cumulative (volume, issue) snapshots. */
JN_API jn_status jn_corpus_evolution_csv(const jn_corpus* corpus, const char* layer,
                                         const char* metric, jn_text** out);

/* Export.  format is "pajek" or "adjacency". */
JN_API jn_status jn_graph_export(const jn_graph* graph, const char* format, jn_text** out);

#ifdef __cplusplus
}
#endif

#endif /* JOURNET_JOURNET_H */

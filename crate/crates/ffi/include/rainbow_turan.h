#ifndef RAINBOW_TURAN_H
#define RAINBOW_TURAN_H

/* Generated by cbindgen from rainbow-turan-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every call.
typedef enum RtStatus {
  RT_STATUS_OK = 0,
  // A required pointer argument was null.
  RT_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  RT_STATUS_UTF8 = 2,
  // A graph or pattern failed to parse.
  RT_STATUS_PARSE = 3,
  // Arguments were structurally invalid (bad vertex, bad parameter, ...).
  RT_STATUS_INVALID_ARGUMENT = 4,
  // The request exceeds a hard limit of the implementation.
  RT_STATUS_UNSUPPORTED = 5,
  // A node or time budget cut the computation.
  RT_STATUS_BUDGET = 6,
  // An internal invariant failed; report this as a bug.
  RT_STATUS_INTERNAL = 7,
} RtStatus;

// Opaque colored-graph handle.
typedef struct RtGraph RtGraph;

// Opaque pattern handle.
typedef struct RtPattern RtPattern;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns a copy of the last error message raised on this thread, or null.
// The caller frees it with [`rt_string_free`].
char *rt_last_error_message(void);

// Frees a string returned by this library. Null is ignored.
void rt_string_free(char *s);

// Parses a graph in CGE text form into a new handle.
enum RtStatus rt_graph_parse_cge(const char *text, struct RtGraph **out);

// Serializes a graph to canonical CGE text.
enum RtStatus rt_graph_to_cge(const struct RtGraph *g, char **out);

// Renders a graph in DOT form with color ids as edge labels.
enum RtStatus rt_graph_to_dot(const struct RtGraph *g, const char *name, char **out);

enum RtStatus rt_graph_vertex_count(const struct RtGraph *g, size_t *out);

enum RtStatus rt_graph_edge_count(const struct RtGraph *g, size_t *out);

// Number of properness violations (uncolored edges and same-colored edges
// sharing a vertex); zero on a totally and properly colored graph.
enum RtStatus rt_graph_proper_violation_count(const struct RtGraph *g, size_t *out);

// Releases a graph handle. Null is ignored.
void rt_graph_free(struct RtGraph *g);

// Parses a pattern shorthand (P4, C6, S3, S2.3, M2, K4) or an edge-list
// literal (`0-1,1-2` or `5@0-1,2-3`).
enum RtStatus rt_pattern_parse(const char *spec, struct RtPattern **out);

enum RtStatus rt_pattern_vertex_count(const struct RtPattern *p, size_t *out);

enum RtStatus rt_pattern_edge_count(const struct RtPattern *p, size_t *out);

// Order of the pattern's automorphism group (patterns up to 12 vertices).
enum RtStatus rt_pattern_automorphism_count(const struct RtPattern *p, uint64_t *out);

// Releases a pattern handle. Null is ignored.
void rt_pattern_free(struct RtPattern *p);

// Exact number of copies of the pattern in the graph. `node_limit` 0 means
// unlimited; `threads` 0 means 1.
enum RtStatus rt_count_copies(const struct RtGraph *g,
                              const struct RtPattern *p,
                              uint64_t node_limit,
                              size_t threads,
                              uint64_t *out);

// Whether the (totally colored) graph contains a rainbow copy of the
// pattern.
enum RtStatus rt_find_rainbow_copy(const struct RtGraph *g,
                                   const struct RtPattern *p,
                                   uint64_t node_limit,
                                   bool *out_found);

// Full census report (copy count, rainbow verdict, witness, node and
// timing accounting) as a JSON string.
enum RtStatus rt_census_json(const struct RtGraph *g,
                             const struct RtPattern *p,
                             uint64_t node_limit,
                             size_t threads,
                             char **out_json);

// Builds a construction by family name (`path-lower`, `odd-cycle-lower`,
// `even-cycle-lower`, `c4-lower`, `disjoint-components`, `tree-lower`,
// `tree-leaf-blowup`, `tree-star-case`, `tree-bare-path`, `clique-lower`,
// `p4-extremal`). Zero-valued `k`, `r` and `b` mean "absent"; `pattern`
// may be null for families that do not take one. On success the graph
// handle is written to `out_graph` and, when `out_provenance_json` is not
// null, the provenance header is written there as JSON.
enum RtStatus rt_construct(const char *family,
                           size_t k,
                           size_t r,
                           const char *pattern,
                           size_t n_target,
                           size_t b,
                           struct RtGraph **out_graph,
                           char **out_provenance_json);

// Exact extremal value ex(n, h, rainbow-f) as JSON
// `{n, h, f, value, status, binding, witness_cge}`. Zero caps mean
// "unlimited" (and a zero time limit means one hour). An incomplete
// search still returns `RT_STATUS_OK`; the JSON carries
// `"status": "incomplete"` and the binding cap.
enum RtStatus rt_exact_extremal_json(size_t n,
                                     const struct RtPattern *h,
                                     const struct RtPattern *f,
                                     uint64_t max_graphs,
                                     uint64_t max_coloring_nodes,
                                     bool dedupe,
                                     uint64_t time_limit_millis,
                                     char **out_json);

// Runs the greedy rainbow alternating-path step. Anchor, forbidden-vertex
// and forbidden-color arrays are passed as pointer/length pairs (null with
// length 0 is fine for the forbidden sets). The result JSON matches the
// CLI: `{found, vertices, colors, ...}` on success, `{found: false, ...}`
// when the search legitimately reports no path.
enum RtStatus rt_lemma_path_json(const struct RtGraph *g,
                                 const size_t *anchors,
                                 size_t anchors_len,
                                 const size_t *forbid_vertices,
                                 size_t forbid_vertices_len,
                                 const uint32_t *forbid_colors,
                                 size_t forbid_colors_len,
                                 bool best_effort,
                                 char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* RAINBOW_TURAN_H */

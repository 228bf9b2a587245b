#ifndef VIZBOUND_H
#define VIZBOUND_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes. Zero is success.
typedef enum VzStatus {
  VZ_STATUS_OK = 0,
  VZ_STATUS_NULL_POINTER = 1,
  VZ_STATUS_INVALID_UTF8 = 2,
  // Malformed graph, edge, vertex or parameter.
  VZ_STATUS_INVALID_INPUT = 3,
  // The supplied vertex set does not dominate.
  VZ_STATUS_NOT_DOMINATING = 4,
  // Node budget, size or combination limit reached.
  VZ_STATUS_LIMIT = 5,
  // Output buffer too small; the required length was written.
  VZ_STATUS_BUFFER_TOO_SMALL = 6,
  // Projection onto the first factor is not a minimal dominating set.
  VZ_STATUS_PROJECTION_NOT_MINIMAL = 7,
  VZ_STATUS_PANIC = 8,
} VzStatus;

// Opaque graph handle.
typedef struct VzGraph VzGraph;

// Summary of one pair check.
typedef struct VzPairReport {
  uintptr_t gamma_g;
  uintptr_t gamma_h;
  uintptr_t gamma_product;
  uint64_t bound_conjecture;
  uint64_t bound_new;
  uint64_t bound_st_half;
  uint64_t bound_st_body;
  uint64_t bound_cs;
  int64_t slack_new;
  bool trace_ok;
  bool violation;
} VzPairReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread. Empty after success.
// The pointer stays valid until the next call on the same thread.
const char *vz_last_error(void);

// Parses a graph6 string.
//
// # Safety
// `g6` must be a nul-terminated string and `out` a valid pointer.
enum VzStatus vz_graph_from_graph6(const char *g6, struct VzGraph **out);

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` as `u0, v0, u1, v1, ...`.
//
// # Safety
// `edges` must point to `2 * edge_count` values (or be null when
// `edge_count` is zero) and `out` must be valid.
enum VzStatus vz_graph_from_edges(uintptr_t n,
                                  const uintptr_t *edges,
                                  uintptr_t edge_count,
                                  struct VzGraph **out);

// Builds a graph from a spec such as `path:5`, `grid:3x4` or a graph6
// string.
//
// # Safety
// `spec` must be a nul-terminated string and `out` a valid pointer.
enum VzStatus vz_graph_from_spec(const char *spec, struct VzGraph **out);

// Releases a graph. Null is ignored.
//
// # Safety
// `g` must come from this library and not be used afterwards.
void vz_graph_free(struct VzGraph *g);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
uintptr_t vz_graph_vertex_count(const struct VzGraph *g);

// Number of edges, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
uintptr_t vz_graph_edge_count(const struct VzGraph *g);

// Encodes the graph as graph6. Free the result with `vz_string_free`.
//
// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum VzStatus vz_graph_to_graph6(const struct VzGraph *g, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void vz_string_free(char *s);

// Cartesian product `g □ h`; vertex `(u, v)` gets index `u * |V(h)| + v`.
// `max_vertices` of 0 means the default limit.
//
// # Safety
// `g` and `h` must be live handles and `out` a valid pointer.
enum VzStatus vz_cartesian_product(const struct VzGraph *g,
                                   const struct VzGraph *h,
                                   uintptr_t max_vertices,
                                   struct VzGraph **out);

// Domination number of `g`, written to `gamma`. When `witness` is not
// null the minimum set is written there in increasing order; `capacity`
// is its length and must be at least the domination number, otherwise
// `BufferTooSmall` is returned with `gamma` set. `node_budget` of 0 means
// the default.
//
// # Safety
// `g` must be a live handle, `gamma` valid, and `witness` null or valid
// for `capacity` writes.
enum VzStatus vz_domination_number(const struct VzGraph *g,
                                   uint64_t node_budget,
                                   uintptr_t *gamma,
                                   uintptr_t *witness,
                                   uintptr_t capacity);

// Solves both factors and the product, evaluates all bounds and verifies
// the counting trace.
//
// # Safety
// `g` and `h` must be live handles and `out` a valid pointer.
enum VzStatus vz_check_pair(const struct VzGraph *g,
                            const struct VzGraph *h,
                            uint64_t node_budget,
                            struct VzPairReport *out);

// Full pair report as JSON, trace included when `include_trace` is set.
// Free the result with `vz_string_free`.
//
// # Safety
// `g` and `h` must be live handles and `out` a valid pointer.
enum VzStatus vz_pair_report_json(const struct VzGraph *g,
                                  const struct VzGraph *h,
                                  uint64_t node_budget,
                                  bool include_trace,
                                  char **out);

// Builds and verifies the trace for the dominating set `d` of `g □ h`,
// given as `d_len` product vertex indices. Writes the report as JSON and
// sets `passed`.
//
// # Safety
// `g` and `h` must be live handles, `d` valid for `d_len` reads, and
// `passed` and `out` valid pointers.
enum VzStatus vz_trace_json(const struct VzGraph *g,
                            const struct VzGraph *h,
                            const uintptr_t *d,
                            uintptr_t d_len,
                            uint64_t node_budget,
                            bool *passed,
                            char **out);

// Scans up to `cap` minimum dominating sets of `g □ h` for one whose
// projection onto `g` is minimal. Writes the search report as JSON.
//
// # Safety
// `g` and `h` must be live handles and `out` a valid pointer.
enum VzStatus vz_remark_search(const struct VzGraph *g,
                               const struct VzGraph *h,
                               uintptr_t cap,
                               char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VIZBOUND_H */

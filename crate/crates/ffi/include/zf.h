#ifndef ZF_H
#define ZF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ZfStatus {
  ZF_STATUS_OK = 0,
  ZF_STATUS_ERR_INPUT = 1,
  ZF_STATUS_ERR_CAPACITY = 2,
  ZF_STATUS_ERR_CONTRACT = 3,
  ZF_STATUS_ERR_UNKNOWN_LAW = 4,
  ZF_STATUS_ERR_IO = 5,
  ZF_STATUS_ERR_NULL_POINTER = 6,
  ZF_STATUS_ERR_BUFFER_TOO_SMALL = 7,
  ZF_STATUS_ERR_PANIC = 8,
} ZfStatus;

typedef struct ZfCatalog ZfCatalog;

typedef struct ZfGraph ZfGraph;

typedef struct ZfReconfig ZfReconfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread, or returns NULL if there is none.
 */
char *zf_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void zf_string_free(char *s);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2 * m` endpoints.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or be NULL when `m` is 0);
 * `out` must be writable.
 */
enum ZfStatus zf_graph_new(size_t n, const size_t *edges, size_t m, struct ZfGraph **out_graph);

/**
 * Parses an edge-list or JSON graph.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum ZfStatus zf_graph_parse(const char *text, struct ZfGraph **out_graph);

/**
 * Builds a named family such as `"cycle"` with parameters `params[0..len]`.
 *
 * # Safety
 * `name` must be a NUL-terminated string, `params` must hold `len` values,
 * and `out` must be writable.
 */
enum ZfStatus zf_graph_family(const char *name,
                              const size_t *params,
                              size_t len,
                              struct ZfGraph **out_graph);

/**
 * # Safety
 * `g` must be NULL or a handle from this library, not yet freed.
 */
void zf_graph_free(struct ZfGraph *g);

/**
 * Vertex count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t zf_graph_order(const struct ZfGraph *g);

/**
 * Edge count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t zf_graph_size(const struct ZfGraph *g);

/**
 * The graph as JSON; free with [`zf_string_free`]. NULL for a NULL handle.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
char *zf_graph_to_json(const struct ZfGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle and `out_z` writable.
 */
enum ZfStatus zf_zero_forcing_number(const struct ZfGraph *g, size_t *out_z);

/**
 * # Safety
 * `g` must be a live graph handle, `set` must hold `len` values and
 * `out_result` must be writable.
 */
enum ZfStatus zf_is_zero_forcing_set(const struct ZfGraph *g,
                                     const size_t *set,
                                     size_t len,
                                     bool *out_result);

/**
 * Enumerates every minimum zero forcing set.
 *
 * # Safety
 * `g` must be a live graph handle and `out_catalog` writable.
 */
enum ZfStatus zf_catalog_new(const struct ZfGraph *g, struct ZfCatalog **out_catalog);

/**
 * # Safety
 * `c` must be NULL or a catalog handle from this library, not yet freed.
 */
void zf_catalog_free(struct ZfCatalog *c);

/**
 * The zero forcing number recorded in the catalog, 0 for NULL.
 *
 * # Safety
 * `c` must be NULL or a live catalog handle.
 */
size_t zf_catalog_z(const struct ZfCatalog *c);

/**
 * Number of minimum zero forcing sets, 0 for NULL.
 *
 * # Safety
 * `c` must be NULL or a live catalog handle.
 */
size_t zf_catalog_len(const struct ZfCatalog *c);

/**
 * Copies set `index` (members ascending) into `buf[0..cap]`; `written` gets
 * the member count. Sets are in lexicographic order.
 *
 * # Safety
 * `c` must be a live catalog handle, `buf` must have room for `cap` values
 * and `written` must be writable.
 */
enum ZfStatus zf_catalog_set(const struct ZfCatalog *c,
                             size_t index,
                             size_t *buf,
                             size_t cap,
                             size_t *written);

/**
 * Builds the zero forcing graph from a catalog.
 *
 * # Safety
 * `c` must be a live catalog handle and `out_reconfig` writable.
 */
enum ZfStatus zf_reconfig_new(const struct ZfCatalog *c, struct ZfReconfig **out_reconfig);

/**
 * # Safety
 * `r` must be NULL or a reconfiguration handle from this library, not yet freed.
 */
void zf_reconfig_free(struct ZfReconfig *r);

/**
 * The zero forcing graph itself as a new graph handle (node `i` is catalog set `i`).
 *
 * # Safety
 * `r` must be a live reconfiguration handle and `out_graph` writable.
 */
enum ZfStatus zf_reconfig_graph(const struct ZfReconfig *r, struct ZfGraph **out_graph);

/**
 * # Safety
 * `r` must be NULL or a live reconfiguration handle.
 */
bool zf_reconfig_is_connected(const struct ZfReconfig *r);

/**
 * Token-jumping distance between two minimum sets; `-1` when unreachable.
 *
 * # Safety
 * `r` must be a live handle, `a`/`b` must hold `a_len`/`b_len` values and
 * `out_distance` must be writable.
 */
enum ZfStatus zf_reconfig_distance(const struct ZfReconfig *r,
                                   const size_t *a,
                                   size_t a_len,
                                   const size_t *b,
                                   size_t b_len,
                                   int64_t *out_distance);

/**
 * Runs a registered law. `max_n` of 0 selects the law's default. On
 * success `passed` tells whether every instance held and `report_json`
 * (if non-NULL) receives the JSON report, to be freed with [`zf_string_free`].
 *
 * # Safety
 * `law_id` must be a NUL-terminated string, `passed` writable, and
 * `report_json` NULL or writable.
 */
enum ZfStatus zf_run_law(const char *law_id,
                         size_t max_n,
                         uint64_t seed,
                         bool *passed,
                         char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZF_H */

/*
 * invcayley — finite commutative rings, their involutory Cayley graphs, and
 * orientable genus classification.
 *
 * C interface to the shared library. All functions are thread-safe for
 * concurrent use on distinct handles; handles are immutable after creation
 * and may be shared for concurrent reads.
 *
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with icg_string_free(). Error-message out-parameters may be
 * NULL when the caller does not want the message.
 */
#ifndef INVCAYLEY_H
#define INVCAYLEY_H

#include <stdint.h>

#if defined(_WIN32)
#define ICG_API __declspec(dllexport)
#else
#define ICG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum icg_status {
  ICG_OK = 0,
  /* the operation completed but the result is a bound, not a definitive
     answer (search budget exhausted) */
  ICG_INDETERMINATE = 1,
  ICG_ERROR_PARSE = 2,
  ICG_ERROR_INVALID_ARGUMENT = 3,
  ICG_ERROR_UNSUPPORTED = 4,
  ICG_ERROR_INTERNAL = 5
} icg_status;

typedef enum icg_format {
  ICG_FORMAT_TEXT = 0,
  ICG_FORMAT_JSON = 1,
  ICG_FORMAT_DOT = 2
} icg_format;

typedef struct icg_ring icg_ring;
typedef struct icg_graph icg_graph;

ICG_API const char* icg_version(void);
ICG_API const char* icg_status_name(icg_status status);
ICG_API void icg_string_free(char* s);

/* ----------------------------------------------------------- ring handles */

/* Parses a ring spec ("Z8", "Z3 x Z5", "GF(9)", "Z2[x,y]/(x^2,xy,y^2)", ...)
 * and builds the ring. */
ICG_API icg_status icg_ring_create(const char* spec, icg_ring** out,
                                   char** error_message);
ICG_API void icg_ring_destroy(icg_ring* ring);

ICG_API uint32_t icg_ring_order(const icg_ring* ring);
ICG_API uint32_t icg_ring_characteristic(const icg_ring* ring);
ICG_API uint32_t icg_ring_involution_count(const icg_ring* ring);
ICG_API uint32_t icg_ring_unit_count(const icg_ring* ring);
ICG_API uint32_t icg_ring_local_factor_count(const icg_ring* ring);
ICG_API icg_status icg_ring_local_factor_order(const icg_ring* ring,
                                               uint32_t index, uint32_t* out);

/* Element arithmetic on indices 0..order-1 (0 is the zero element). */
ICG_API icg_status icg_ring_add(const icg_ring* ring, uint32_t x, uint32_t y,
                                uint32_t* out);
ICG_API icg_status icg_ring_mul(const icg_ring* ring, uint32_t x, uint32_t y,
                                uint32_t* out);
ICG_API icg_status icg_ring_neg(const icg_ring* ring, uint32_t x,
                                uint32_t* out);
ICG_API uint32_t icg_ring_one(const icg_ring* ring);
ICG_API icg_status icg_ring_element_label(const icg_ring* ring, uint32_t x,
                                          char** out);
ICG_API icg_status icg_ring_canonical_spec(const icg_ring* ring, char** out);

/* ---------------------------------------------------------- graph handles */

ICG_API icg_status icg_graph_create(const icg_ring* ring, icg_graph** out,
                                    char** error_message);
ICG_API void icg_graph_destroy(icg_graph* graph);

ICG_API uint32_t icg_graph_vertex_count(const icg_graph* graph);
ICG_API uint64_t icg_graph_edge_count(const icg_graph* graph);
/* common degree, or -1 when the graph is not regular */
ICG_API int32_t icg_graph_regular_degree(const icg_graph* graph);
ICG_API int icg_graph_connected(const icg_graph* graph);
ICG_API int icg_graph_bipartite(const icg_graph* graph);
/* girth, or -1 when the graph is acyclic */
ICG_API int64_t icg_graph_girth(const icg_graph* graph);
ICG_API icg_status icg_graph_is_planar(const icg_graph* graph, int* planar);
/* Exact genus search: on ICG_OK low == high == exact genus; on
 * ICG_INDETERMINATE [low, high] brackets it. budget counts face-trace
 * steps; pass 0 for the default. */
ICG_API icg_status icg_graph_genus(const icg_graph* graph, uint64_t budget,
                                   int32_t* low, int32_t* high);

/* -------------------------------------------------------- command surface
 *
 * High-level operations matching the CLI one to one; output is rendered in
 * the requested format. These keep scripted and human use byte-identical
 * across runs. */

ICG_API icg_status icg_analyze(const char* spec, icg_format format,
                               char** out, char** error_message);
ICG_API icg_status icg_classify(const char* spec, icg_format format,
                                char** out, char** error_message);
ICG_API icg_status icg_genus(const char* spec, uint64_t budget,
                             icg_format format, char** out,
                             char** error_message);
ICG_API icg_status icg_embed(const char* spec, icg_format format, char** out,
                             char** error_message);
/* format must be ICG_FORMAT_DOT or ICG_FORMAT_JSON */
ICG_API icg_status icg_export(const char* spec, icg_format format, char** out,
                              char** error_message);
/* theorem_filter_csv: comma-separated theorem ids, or NULL/"" for all */
ICG_API icg_status icg_verify(uint32_t max_order, uint64_t budget,
                              const char* theorem_filter_csv,
                              icg_format format, char** out,
                              char** error_message);

#ifdef __cplusplus
}
#endif

#endif /* INVCAYLEY_H */

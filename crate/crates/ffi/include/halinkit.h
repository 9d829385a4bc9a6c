#ifndef HALINKIT_H
#define HALINKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define HK_ABI_VERSION 1

typedef enum HkStatus {
  HkStatus_Ok = 0,
  HkStatus_NullPointer = 1,
  HkStatus_InvalidUtf8 = 2,
  /**
   * Malformed graph, point or permutation.
   */
  HkStatus_Input = 3,
  /**
   * A documented precondition does not hold.
   */
  HkStatus_Precondition = 4,
  /**
   * Search budget or truncation depth ran out.
   */
  HkStatus_Exhausted = 5,
  /**
   * Internal panic caught at the boundary.
   */
  HkStatus_Panic = 6,
} HkStatus;

typedef enum HkFamily {
  HkFamily_Path = 0,
  HkFamily_Cycle = 1,
  HkFamily_Complete = 2,
  HkFamily_CompleteBipartite = 3,
  HkFamily_Petersen = 4,
  HkFamily_BinaryTree = 5,
  HkFamily_Comb = 6,
} HkFamily;

/**
 * Opaque graph handle.
 */
typedef struct HkGraph HkGraph;

/**
 * Opaque permutation group handle.
 */
typedef struct HkGroup HkGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

uint32_t hk_abi_version(void);

/**
 * Message for the last failed call on this thread. Valid until the next
 * failing call on the same thread; never null.
 */
const char *hk_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void hk_string_free(char *s);

enum HkStatus hk_graph_from_graph6(const char *text, struct HkGraph **out);

/**
 * Builds a named family. `a` is the vertex count (or first part, or depth),
 * `b` the second part of a complete bipartite graph; unused sizes are ignored.
 */
enum HkStatus hk_graph_from_family(enum HkFamily family, size_t a, size_t b, struct HkGraph **out);

void hk_graph_free(struct HkGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 */
size_t hk_graph_vertex_count(const struct HkGraph *g);

enum HkStatus hk_graph_to_graph6(const struct HkGraph *g, char **out);

enum HkStatus hk_graph_automorphisms(const struct HkGraph *g, struct HkGroup **out);

void hk_group_free(struct HkGroup *grp);

/**
 * Group order, or [`HkStatus::Precondition`] if it does not fit in 64 bits.
 */
enum HkStatus hk_group_order_u64(const struct HkGroup *grp, uint64_t *out);

/**
 * Group order in decimal.
 */
enum HkStatus hk_group_order_string(const struct HkGroup *grp, char **out);

enum HkStatus hk_group_is_base(const struct HkGroup *grp,
                               const size_t *points,
                               size_t len,
                               bool *out);

enum HkStatus hk_group_is_distinguishing(const struct HkGroup *grp,
                                         const size_t *points,
                                         size_t len,
                                         bool *out);

/**
 * Minimum base size. `budget` caps the subsets tested; 0 means the default.
 */
enum HkStatus hk_group_determining_number(const struct HkGroup *grp, uint64_t budget, size_t *out);

/**
 * Minimum distinguishing set size; `exists` is false when there is none.
 */
enum HkStatus hk_group_distinguishing_cost(const struct HkGroup *grp,
                                           uint64_t budget,
                                           bool *exists,
                                           size_t *out);

enum HkStatus hk_group_motion(const struct HkGroup *grp, size_t *out);

/**
 * Runs a command-line invocation (without the program name) and returns its
 * JSON report in `out_json` and its exit code in `exit_code`. The report
 * may be empty when the command fails before producing one; the error text
 * is then available from [`hk_last_error_message`].
 */
enum HkStatus hk_run_json(const char *const *argv,
                          size_t argc,
                          char **out_json,
                          int32_t *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HALINKIT_H */

/*
 * rootcluster: C API for the permutation-group cluster calculus.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return rc_status; on failure the out-parameters are untouched
 * and rc_last_error() describes the problem for the calling thread.
 * Permutations cross this boundary as 1-based image arrays.
 * Reports cross it as JSON strings (free them with rc_string_free).
 */

#ifndef ROOTCLUSTER_H
#define ROOTCLUSTER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rc_status {
  RC_OK = 0,
  RC_ERR_DEGREE_MISMATCH = 1,
  RC_ERR_INVALID_PERMUTATION = 2,
  RC_ERR_GROUP_TOO_LARGE = 3,
  RC_ERR_NOT_A_SUBGROUP = 4,
  RC_ERR_PARENT_MISMATCH = 5,
  RC_ERR_INVALID_ROOT_PAIR = 6,
  RC_ERR_INVALID_EXTENSION_PAIR = 7,
  RC_ERR_NOT_AN_EXTENSION = 8,
  RC_ERR_BAD_PARAMETER = 9,
  RC_ERR_BAD_ORDERING = 10,
  RC_ERR_DEGREE_TOO_SMALL = 11,
  RC_ERR_PARSE = 12,
  RC_ERR_INTERNAL = 13
} rc_status;

typedef struct rc_group rc_group;       /* fully enumerated permutation group */
typedef struct rc_subgroup rc_subgroup; /* subgroup of a specific group */
typedef struct rc_pair rc_pair;         /* faithful transitive pair (G, Stab(1)) */

const char* rc_status_name(rc_status status);
/* thread-local message for the most recent failure */
const char* rc_last_error(void);
const char* rc_version(void);

/* Enumeration caps for the calling thread (defaults: 200000 / 5000). */
void rc_set_limits(int64_t max_order, int32_t max_degree);

/* ---- groups ---------------------------------------------------------- */

/* images: n_generators rows of `degree` 1-based entries, row-major. */
rc_status rc_group_create(int32_t degree, const int64_t* images, int32_t n_generators,
                          rc_group** out);
/* "cyclic:6", "klein4", "sym:4", "alt:5", products with commas. */
rc_status rc_group_from_expr(const char* expr, rc_group** out);
rc_status rc_group_direct_product(const rc_group* g, const rc_group* r, rc_group** out);
void rc_group_free(rc_group* g);
int32_t rc_group_degree(const rc_group* g);
int64_t rc_group_order(const rc_group* g);

/* ---- subgroups ------------------------------------------------------- */

rc_status rc_subgroup_from_generators(const rc_group* g, const int64_t* images,
                                      int32_t n_generators, rc_subgroup** out);
/* pointwise stabilizer of 1-based points */
rc_status rc_subgroup_stabilizer(const rc_group* g, const int64_t* points, int32_t n_points,
                                 rc_subgroup** out);
rc_status rc_subgroup_core(const rc_group* g, const rc_subgroup* h, rc_subgroup** out);
void rc_subgroup_free(rc_subgroup* h);
int64_t rc_subgroup_order(const rc_subgroup* h);

/* ---- pairs ----------------------------------------------------------- */

/* Reduce (g, h) to the faithful transitive pair on the cosets of h. */
rc_status rc_pair_reduce(const rc_group* g, const rc_subgroup* h, rc_pair** out);
/* "metacyclic:12", "wreathlike:2:3", "tuples:5:2", "alt:5", "<base>+<groupexpr>" */
rc_status rc_pair_from_expr(const char* expr, rc_pair** out);
rc_status rc_pair_magnify(const rc_pair* p, const rc_group* by, rc_pair** out);
rc_status rc_pair_group(const rc_pair* p, rc_group** out);
rc_status rc_pair_stabilizer(const rc_pair* p, rc_subgroup** out);
void rc_pair_free(rc_pair* p);
int32_t rc_pair_degree(const rc_pair* p);

/* ---- reports (JSON out-params) --------------------------------------- */

rc_status rc_cluster_report_json(const rc_pair* p, char** out_json);
rc_status rc_partition_json(const rc_pair* p, char** out_json);
/* ordering: 1-based points, one per cluster */
rc_status rc_tower_json(const rc_pair* p, const int64_t* ordering, int32_t n, char** out_json);
rc_status rc_tower_sweep_json(const rc_pair* p, char** out_json);
/* descending != 0 for the normalizer chain, 0 for the normal-closure chain */
rc_status rc_chain_json(const rc_group* g, const rc_subgroup* h, int32_t descending,
                        char** out_json);
rc_status rc_capacity_json(const rc_group* g, const rc_subgroup* upper, const rc_subgroup* lower,
                           char** out_json);
rc_status rc_hint_json(const rc_group* g, const rc_subgroup* upper, const rc_subgroup* lower,
                       char** out_json);
rc_status rc_weak_magnification_json(const rc_group* g, const rc_subgroup* upper,
                                     const rc_subgroup* lower, char** out_json);
rc_status rc_detect_json(const rc_pair* p, char** out_json);
rc_status rc_basechange_json(const rc_pair* p, const rc_group* by, char** out_json);
rc_status rc_link_profile_json(const rc_pair* p, char** out_json);

/* ---- catalog and verification ---------------------------------------- */

rc_status rc_catalog_list_json(char** out_json);
/* all_pass=0/1; the JSON carries one entry per assertion */
rc_status rc_catalog_run_json(const char* name, int32_t* all_pass, char** out_json);
rc_status rc_verify_json(const rc_group* g, const rc_subgroup* h, int32_t* all_pass,
                         char** out_json);

void rc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ROOTCLUSTER_H */

/*
 * czlab: exact Conley-Zehnder index calculus for symplectic path data,
 * torus intersection cycles, and quadratic rotations of CP^n.
 *
 * C interface of the shared library. All functions return a czl_status;
 * results come back through out-parameters. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * czl_string_free(). Handles are opaque and freed with their *_free()
 * function. On any non-CZL_OK status, czl_last_error() yields a
 * human-readable message for the calling thread.
 *
 * Rational numbers cross this interface as "p/q" strings (or "p" for
 * integers); no value is ever converted through floating point.
 */

#ifndef CZLAB_H
#define CZLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum czl_status {
    CZL_OK = 0,
    CZL_ERR_PARSE = 1,
    CZL_ERR_SCHEMA = 2,
    CZL_ERR_INVALID_ARGUMENT = 3,
    CZL_ERR_NONDEGENERACY = 4,
    CZL_ERR_SIGNATURE_PARITY = 5,
    CZL_ERR_ODD_LOOP = 6,
    CZL_ERR_HORIZON = 7,
    CZL_ERR_NOT_ELLIPTIC = 8,
    CZL_ERR_ENDPOINT_ON_CYCLE = 9,
    CZL_ERR_DEGENERATE_SEGMENT = 10,
    CZL_ERR_HYPOTHESIS_NOT_MET = 11,
    CZL_ERR_DEGENERATE_ROTATION = 12,
    CZL_ERR_NOT_BALANCED = 13,
    CZL_ERR_RECAPPING = 14,
    CZL_ERR_DUPLICATE_ACTION = 15,
    CZL_ERR_WINDOW_BOUND = 16,
    CZL_ERR_WRONG_DIMENSION = 17,
    CZL_ERR_FAMILY_EXHAUSTED = 18,
    CZL_ERR_INTERNAL = 19
} czl_status;

/* Reconstruction outcomes (czl_reconstruct). */
enum {
    CZL_RECONSTRUCT_MATCH = 0,
    CZL_RECONSTRUCT_NO_MATCH = 1,
    CZL_RECONSTRUCT_AMBIGUOUS = 2
};

typedef struct czl_descriptor czl_descriptor; /* symplectic path invariants   */
typedef struct czl_rotation czl_rotation;     /* quadratic rotation of CP^n   */
typedef struct czl_table czl_table;           /* capped mean-index table      */

const char* czl_version(void);
const char* czl_last_error(void);
void czl_string_free(char* s);
const char* czl_status_name(czl_status status);

/* --- symplectic path descriptors ------------------------------------------ */

/* Schema: {"loop": int, "mult_minus_one": int, "hyperbolic_pairs": int,
 *          "elliptic": [{"theta_num": int, "theta_den": int,
 *                        "multiplicity": int, "signature": int}],
 *          "horizon": int}
 * Construction canonicalizes (sorts/merges elliptic entries) and validates
 * every type invariant, including non-degeneracy up to "horizon". */
czl_status czl_descriptor_parse(const char* json, czl_descriptor** out);
czl_status czl_descriptor_to_json(const czl_descriptor* d, char** out);
void czl_descriptor_free(czl_descriptor* d);

/* Re-certifies the invariants for horizon k_max. */
czl_status czl_descriptor_validate(const czl_descriptor* d, int64_t k_max, czl_descriptor** out);
czl_status czl_descriptor_horizon(const czl_descriptor* d, int64_t* out);
czl_status czl_descriptor_total_dimension(const czl_descriptor* d, int64_t* out);

czl_status czl_cz_index(const czl_descriptor* d, int64_t* out);
czl_status czl_mean_index(const czl_descriptor* d, char** out);

/* a(k) = floor((k+1) theta/2) - floor(k theta/2) for a logarithmic
 * eigenvalue theta given as a rational string; requires k + 1 <= horizon. */
czl_status czl_jump_a(const char* theta, int64_t horizon, int64_t k, int* out);

/* values must hold k_max entries: values[k-1] = mu_k (resp. mu'_k).
 * Index sequences need horizon >= k_max; jump sequences horizon >= k_max+1. */
czl_status czl_index_sequence(const czl_descriptor* d, int64_t k_max, int64_t* values);
czl_status czl_jump_sequence(const czl_descriptor* d, int64_t k_max, int64_t* values);

/* CSV "k,mu,jump" with rows 1..k_max (needs horizon >= k_max + 1). */
czl_status czl_sequences_csv(const czl_descriptor* d, int64_t k_max, char** out);

czl_status czl_direct_sum(const czl_descriptor* a, const czl_descriptor* b,
                          czl_descriptor** out);
czl_status czl_inverse(const czl_descriptor* d, czl_descriptor** out);

czl_status czl_check_condition_b(const czl_descriptor* d, int64_t l, int* holds,
                                 char** report_json);
/* witness receives the first k with 2l not dividing mu'_k, or 0. */
czl_status czl_check_condition_a(const czl_descriptor* d, int64_t l, int64_t k_max, int* holds,
                                 int64_t* witness);

czl_status czl_reconstruct(const int64_t* jumps, int64_t count,
                           const czl_descriptor* const* pool, size_t pool_len, int* outcome,
                           size_t* match_index);

/* --- torus machinery -------------------------------------------------------- */

/* {"coordinates": ["p/q", ...]}, the k-th iterate of the eigenvalue vector. */
czl_status czl_eigenvalue_vector(const czl_descriptor* d, int64_t k, char** out);

/* <lambda^k A, T>; requires an elliptic-only descriptor. */
czl_status czl_arc_intersection(const czl_descriptor* d, int64_t k, int64_t* out);

/* path_json: {"points": [["p/q", ...], ...]} in the universal cover;
 * weights[i] weights the wall {z_i = 1}. */
czl_status czl_path_intersection(const char* path_json, const int64_t* weights, size_t count,
                                 int64_t* out);

czl_status czl_verify_intersect_divisibility(const czl_descriptor* d, int64_t l, int64_t k_max,
                                             int* passed, char** report_json);

/* --- rotations of CP^n -------------------------------------------------------- */

/* angles: n+1 rational strings; the result is sorted, zero-sum, canonical. */
czl_status czl_rotation_make(int64_t n, const char* const* angles, size_t count, int64_t k_max,
                             czl_rotation** out);
/* Schema: {"n": int, "angles": ["p/q", ...], "horizon": int} */
czl_status czl_rotation_parse(const char* json, czl_rotation** out);
czl_status czl_rotation_to_json(const czl_rotation* r, char** out);
void czl_rotation_free(czl_rotation* r);

czl_status czl_trivial_mean_indices(const czl_rotation* r, char** json_array);
czl_status czl_recapped_fixed_points(const czl_rotation* r, czl_table** out);

/* CSV "label,index,value" for the marked action spectrum over [lo, hi];
 * the bounds are rational strings and must avoid the spectrum. */
czl_status czl_action_spectrum_csv(const czl_rotation* r, const char* lo, const char* hi,
                                   char** out);

/* Signed period-2 logarithmic multipliers of point i as a JSON array. */
czl_status czl_floquet_multipliers(const czl_rotation* r, int64_t i, char** json_array);

/* Loop-triviality criterion on a raw eigenvalue vector. */
czl_status czl_loop_is_trivial(const char* const* angles, size_t count, int* out);

/* --- fixed point tables ---------------------------------------------------- */

/* Schema: {"n": int, "delta": ["p/q", ...], "descriptors": optional} */
czl_status czl_table_parse(const char* json, czl_table** out);
czl_status czl_table_to_json(const czl_table* t, char** out);
void czl_table_free(czl_table* t);

czl_status czl_table_is_balanced(const czl_table* t, int* out);
czl_status czl_matching_rotation(const czl_table* t, int64_t k_max, czl_rotation** out);
czl_status czl_check_matching_hypotheses(const czl_table* t, int64_t k_max, int* holds,
                                         char** report_json);
/* JSON array of integer vectors r with sum r_i delta_i = 0 mod 2(n+1). */
czl_status czl_resonance_lattice(const czl_table* t, int64_t bound, char** json_array);

czl_status czl_s2_antisymmetry(const czl_descriptor* d0, const czl_descriptor* d1,
                               int64_t k_max, int* passed, char** report_json);

/* --- seeded generation and verification suites ------------------------------- */

/* family_json (descriptors): {"count": int, "den_min": int, "den_max": int,
 *   "min_entries": int, "max_entries": int, "min_numerator": int,
 *   "odd_numerators": bool, "max_multiplicity": int, "loop_half_range": int,
 *   "max_mult_minus_one": int, "max_hyperbolic_pairs": int,
 *   "allow_zero_signature": bool}; all fields optional except none.
 * Result: {"instances": [...], "rejected_draws": int}. */
czl_status czl_generate_descriptors(uint64_t seed, const char* family_json,
                                    char** instances_json);

/* family_json (rotations): {"count": int, "n_min": int, "n_max": int,
 *   "denominators": [int, ...], "coefficient_range": int, "horizon": int}. */
czl_status czl_generate_rotations(uint64_t seed, const char* family_json,
                                  char** instances_json);

/* Suites: oracle, theorem-forward, theorem-converse, theorem, reconstruct,
 * intersect, rotation, mean-bound, antisymmetry. The report serializes the
 * first violating instance when a trial fails. */
czl_status czl_run_suite(const char* name, uint64_t seed, int64_t trials, int* all_passed,
                         char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* CZLAB_H */

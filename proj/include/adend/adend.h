/*
 * adend — exact computer algebra for algebras with one or two bilinear
 * operations given by rational structure constants: axiom-bundle checking,
 * derived-structure and q-algebra transforms, bimodule/operator and
 * bilinear-form machinery, and Groebner-basis solving over Q.
 *
 * C API conventions:
 *   - every function returns an adend_status; ADEND_OK is 0
 *   - a predicate being false is NOT an error: reports carry the verdict
 *   - handles are opaque and freed with their *_free function
 *   - returned strings are heap-allocated JSON; free with adend_string_free
 *   - on error, adend_last_error() returns a thread-local message
 *
 * Data formats (JSON):
 *   algebra  {"dim": n, "basis": ["e1",...],
 *             "ops": {"mul": {"e1,e1": {"e2": "p/q"}, ...}, ...},
 *             "forms": {"B": {"e1,e2": "p/q", ...}}}      (omitted = zero)
 *   bimodule {"base": <algebra>, "op": "mul", "space_dim": m,
 *             "l": {"e1": [["p/q",...],...]}, "r": {...}}  (row-major)
 *   matrix   [["p/q", ...], ...]                           (row-major)
 */

#ifndef ADEND_H
#define ADEND_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adend_status {
    ADEND_OK = 0,
    ADEND_ERR_INVALID_ARGUMENT = 1, /* bad handle, malformed input, unknown name */
    ADEND_ERR_PARSE = 2,            /* JSON or identity-DSL syntax error */
    ADEND_ERR_PRECONDITION = 3,     /* e.g. non-associative op where required */
    ADEND_ERR_INTERNAL = 4
} adend_status;

typedef struct adend_algebra adend_algebra;
typedef struct adend_bimodule adend_bimodule;

const char* adend_version(void);

/* Thread-local message for the most recent failing call in this thread. */
const char* adend_last_error(void);

void adend_string_free(char* s);
void adend_algebra_free(adend_algebra* a);
void adend_bimodule_free(adend_bimodule* m);

/* ------------------------------------------------------------- algebras */

adend_status adend_algebra_parse(const char* json, adend_algebra** out);
adend_status adend_algebra_to_json(const adend_algebra* a, char** out_json);

/* Structural validation report: {"valid": bool, "error": "..."} */
adend_status adend_algebra_validate(const char* json, char** report_json);

/* -------------------------------------------------------------- catalog */

adend_status adend_catalog_list(char** out_json);
/* params_json: {"lambda": "1/2", ...} or NULL */
adend_status adend_catalog_load(const char* id, const char* params_json, adend_algebra** out);
adend_status adend_catalog_self_test(char** report_json);

/* --------------------------------------------------------------- checks */

/* Identity in the DSL "x,y,z: lhs = rhs"; binding_json optionally maps op
 * symbols used in the identity to algebra op names. */
adend_status adend_check_identity(const adend_algebra* a, const char* identity_src,
                                  const char* binding_json, char** report_json);

/* bundle: a registry name, or an inline JSON bundle definition
 * {"name",...,"slots": [...], "identities": [...], "derived": {...}}.
 * binding_json maps slots to op names; q is "p/q" or NULL. */
adend_status adend_check_structure(const adend_algebra* a, const char* bundle,
                                   const char* binding_json, const char* q, char** report_json);

adend_status adend_registry_list(char** out_json);

/* Agreement of two bundles on one algebra. */
adend_status adend_check_equiv(const adend_algebra* a, const char* bundle_a, const char* bundle_b,
                               const char* binding_json, const char* q, char** report_json);

/* Agreement of two bundles over `count` seeded random algebras of dimension
 * `dim` (two-op tensors with small rational entries). */
adend_status adend_check_equiv_random(const char* bundle_a, const char* bundle_b, unsigned dim,
                                      unsigned count, unsigned long long seed,
                                      char** report_json);

/* ----------------------------------------------------------- transforms */

/* kind: sum | commutator | pre-lie | anti-pre-lie | q-pair | q-pair-alt |
 *       q-single.  ops_json: array of source op names (1 or 2 as the kind
 * requires); q required for the q-kinds; out_json: array of result op
 * names or NULL for defaults. */
adend_status adend_transform(const adend_algebra* a, const char* kind, const char* ops_json,
                             const char* q, const char* out_json, adend_algebra** out);

/* Double space A (+) A with (x,a)(y,b) = (x|>y + x<|y, -x|>b - a<|y). */
adend_status adend_construct_double(const adend_algebra* a, const char* op_r, const char* op_l,
                                    adend_algebra** out);

/* ------------------------------------------------------------ bimodules */

adend_status adend_bimodule_parse(const char* json, adend_bimodule** out);
adend_status adend_bimodule_to_json(const adend_bimodule* m, char** out_json);
adend_status adend_bimodule_regular(const adend_algebra* a, const char* op, adend_bimodule** out);
adend_status adend_bimodule_neg_mult(const adend_algebra* a, const char* op_r, const char* op_l,
                                     adend_bimodule** out);
adend_status adend_bimodule_check(const adend_bimodule* m, char** report_json);
adend_status adend_bimodule_dual(const adend_bimodule* m, adend_bimodule** out);
adend_status adend_bimodule_semidirect(const adend_bimodule* m, adend_algebra** out);

/* ------------------------------------------------------------ operators */

adend_status adend_check_anti_o(const adend_bimodule* m, const char* T_matrix_json,
                                char** report_json);
adend_status adend_check_anti_rb(const adend_algebra* a, const char* op,
                                 const char* P_matrix_json, char** report_json);
adend_status adend_check_anti_cocycle(const adend_bimodule* m, const char* D_matrix_json,
                                      char** report_json);
adend_status adend_induced_ops(const adend_bimodule* m, const char* T_matrix_json,
                               adend_algebra** out);
/* Returns the semidirect algebra and the hat map (x,u) -> (T(u),0). */
adend_status adend_embed_hat(const adend_bimodule* m, const char* T_matrix_json,
                             adend_algebra** out_alg, char** hat_matrix_json);

/* ---------------------------------------------------------- derivations */

adend_status adend_annihilators(const adend_algebra* a, const char* op, char** report_json);
adend_status adend_invariants(const adend_algebra* a, const char* ops_json, char** report_json);
adend_status adend_mult_operator(const adend_algebra* a, const char* op, const char* side,
                                 const char* vector_json, char** matrix_json);

/* ---------------------------------------------------------------- forms */

adend_status adend_form_classify(const adend_algebra* a, const char* form, const char* op,
                                 char** report_json);
adend_status adend_form_invariance(const adend_algebra* a, const char* form, const char* op_r,
                                   const char* op_l, char** report_json);
adend_status adend_form_invariance_apl(const adend_algebra* a, const char* form,
                                       const char* circ_op, char** report_json);
/* Output algebra gains ops tri_r/tri_l; the report carries the
 * postcondition verdicts. */
adend_status adend_form_reconstruct(const adend_algebra* a, const char* form, const char* op,
                                    adend_algebra** out, char** report_json);
/* A x| A* with the canonical pairing attached as form "B". */
adend_status adend_form_semidirect(const adend_algebra* a, const char* op_r, const char* op_l,
                                   adend_algebra** out);
adend_status adend_form_equivalence(const adend_algebra* a, const char* form, const char* op_r,
                                    const char* op_l, char** report_json);
/* Compatible anti-pre-Lie op from a nondegenerate form. */
adend_status adend_form_anti_pre_lie(const adend_algebra* a, const char* form, const char* op,
                                     adend_algebra** out);

/* --------------------------------------------------------------- solver */

/* Reports: {"consistent": bool, "groebner": ["a11", ...],
 *           "free_vars": [...], "sample_points": [{...}]} */
adend_status adend_solve_compatible(const adend_algebra* a, const char* op, char** report_json);
adend_status adend_solve_anti_rb(const adend_algebra* a, const char* op, char** report_json);
/* pins_json: {"r_112": "1", ...} or NULL. */
adend_status adend_solve_free(unsigned dim, const char* pins_json, char** report_json);
/* ops_json: array of op names present in both algebras. */
adend_status adend_solve_iso(const adend_algebra* a, const adend_algebra* b,
                             const char* ops_json, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* ADEND_H */

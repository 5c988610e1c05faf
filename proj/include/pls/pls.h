/*
 * C interface to the PL-sphere library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a pls_status; on failure the out-parameters
 * are left untouched and pls_last_error() describes the problem (per thread).
 * Strings returned through char** are owned by the caller and released with
 * pls_string_free.
 */
#ifndef PLS_PLS_H
#define PLS_PLS_H

#include <stddef.h>
#include <stdint.h>

#if defined(PLS_BUILDING_LIBRARY)
#define PLS_API __attribute__((visibility("default")))
#else
#define PLS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pls_status {
  PLS_OK = 0,
  PLS_ERR_INVALID_ARGUMENT,
  PLS_ERR_PARSE,
  PLS_ERR_EMPTY_INPUT,
  PLS_ERR_NOT_PURE,
  PLS_ERR_NON_MAXIMAL_FACET,
  PLS_ERR_NOT_A_FACE,
  PLS_ERR_NOT_A_VERTEX,
  PLS_ERR_LABEL_COLLISION,
  PLS_ERR_INVALID_LABEL,
  PLS_ERR_TOO_MANY_VERTICES,
  PLS_ERR_LENGTH_MISMATCH,
  PLS_ERR_BOUNDS_VIOLATION,
  PLS_ERR_NOT_COVERING_PAIR,
  PLS_ERR_WITNESS_VERIFICATION_FAILED,
  PLS_ERR_SHAPE_MISMATCH,
  PLS_ERR_INVALID_INPUT_CERTIFICATE,
  PLS_ERR_BUDGET_EXCEEDED,
  PLS_ERR_HYPOTHESIS_VIOLATED,
  PLS_ERR_NOT_A_SEED,
  PLS_ERR_UNSUPPORTED_P,
  PLS_ERR_TOO_SMALL,
  PLS_ERR_INVALID_PARAMETERS,
  PLS_ERR_THEOREM_CONTRADICTION,
  PLS_ERR_VOID_COMPLEX,
  PLS_ERR_IO,
  PLS_ERR_INTERNAL
} pls_status;

typedef struct pls_complex pls_complex;
typedef struct pls_charmap pls_charmap;
typedef struct pls_family pls_family;

/* "NotPure", "LabelCollision", ... */
PLS_API const char* pls_status_name(pls_status status);
/* Message of the last failure on the calling thread ("" if none). */
PLS_API const char* pls_last_error(void);
PLS_API void pls_string_free(char* s);
/* "sha256:<hex>" of a byte buffer. */
PLS_API pls_status pls_sha256(const void* data, size_t length, char** out);

/* ---- complexes ---------------------------------------------------------- */

/* Complex file text (see README); the trace, if any, is kept on the handle. */
PLS_API pls_status pls_complex_parse(const char* json, pls_complex** out);
/* Raw facets as a JSON array of arrays of labels, e.g. [["1","2"],["2","3"]]. */
PLS_API pls_status pls_complex_from_label_facets(const char* facets_json, const char* name,
                                                 pls_complex** out);
/* pentagon, octahedron, c47, polygon:K, cross:N, cyclic:D,M, simplex:K, ... */
PLS_API pls_status pls_complex_named(const char* spec, pls_complex** out);
PLS_API pls_status pls_complex_clone(const pls_complex* k, pls_complex** out);
PLS_API void pls_complex_free(pls_complex* k);

/* Canonical complex file text including the trace. */
PLS_API pls_status pls_complex_to_json(const pls_complex* k, char** out);
PLS_API pls_status pls_complex_hash(const pls_complex* k, char** out);
PLS_API size_t pls_complex_vertex_count(const pls_complex* k);
PLS_API size_t pls_complex_facet_count(const pls_complex* k);
/* n - 1 */
PLS_API int pls_complex_dimension(const pls_complex* k);
PLS_API pls_status pls_complex_set_name(pls_complex* k, const char* name);
PLS_API pls_status pls_complex_append_trace(pls_complex* k, const char* step);

/* ---- operations ---------------------------------------------------------
 * Faces are given as comma-separated label lists ("1,1#1"). Labels passed as
 * NULL take their defaults: the next free "v#k" for wedge copies,
 * "w{a+b}" for subdivision vertices, "N"/"S" for suspension apexes. */
PLS_API pls_status pls_link(const pls_complex* k, const char* face, pls_complex** out);
PLS_API pls_status pls_star(const pls_complex* k, const char* face, pls_complex** out);
PLS_API pls_status pls_join(const pls_complex* k, const pls_complex* l, int rename_collisions,
                            pls_complex** out);
PLS_API pls_status pls_wedge(const pls_complex* k, const char* vertex, const char* copy_label,
                             pls_complex** out);
PLS_API pls_status pls_wedge_via_nonfaces(const pls_complex* k, const char* vertex,
                                          const char* copy_label, pls_complex** out);
PLS_API pls_status pls_stellar_subdivision(const pls_complex* k, const char* face,
                                           const char* new_label, pls_complex** out);
PLS_API pls_status pls_suspension(const pls_complex* k, const char* north, const char* south,
                                  pls_complex** out);
PLS_API pls_status pls_j_construction(const pls_complex* k, const uint32_t* j, size_t length,
                                      pls_complex** out);
/* Comma-separated labels of the assembled face of K(J) selected by s. */
PLS_API pls_status pls_assembled_face(const pls_complex* k, const uint32_t* j,
                                      const uint32_t* s, size_t length, char** out);

/* ---- queries returning JSON --------------------------------------------- */

/* {"minimal_non_faces": [[labels]...]} */
PLS_API pls_status pls_minimal_non_faces_json(const pls_complex* k, char** out);
/* {"counts": [...], "complete": bool, "euler_characteristic": int|null} */
PLS_API pls_status pls_f_vector_json(const pls_complex* k, uint64_t face_budget, char** out);
/* {"isomorphic": bool, "map": {label: label} | null} */
PLS_API pls_status pls_isomorphism_json(const pls_complex* a, const pls_complex* b, char** out);
/* {"covering_pairs": [...], "pairs": [{"pair", "kind", "witness"}...],
 *  "seed": {...}, "suspended": {...}} */
PLS_API pls_status pls_classify_json(const pls_complex* k, char** out);
/* {"seed": complex, "J": [...], "label_map": {...}, "round_trip": bool} */
PLS_API pls_status pls_decompose_json(const pls_complex* k, char** out);
/* Sphere evidence report. */
PLS_API pls_status pls_evidence_json(const pls_complex* k, uint64_t face_budget, char** out);
/* Picard number and inequality report; certificate may be NULL. */
PLS_API pls_status pls_inequality_json(const pls_complex* k, const pls_charmap* certificate,
                                       char** out);

/* ---- characteristic matrices -------------------------------------------- */

typedef enum pls_ring { PLS_RING_GF2 = 0, PLS_RING_INT = 1 } pls_ring;

/* Parses a certificate file for k, checking the complex hash and re-verifying. */
PLS_API pls_status pls_charmap_parse(const char* json, const pls_complex* k, pls_charmap** out);
PLS_API pls_status pls_charmap_from_rows(const char* rows_json, pls_ring ring,
                                         pls_charmap** out);
PLS_API void pls_charmap_free(pls_charmap* c);
/* Certificate file text for k. */
PLS_API pls_status pls_charmap_to_json(const pls_charmap* c, const pls_complex* k, char** out);
PLS_API pls_ring pls_charmap_ring(const pls_charmap* c);
PLS_API pls_status pls_charmap_mod2(const pls_charmap* c, pls_charmap** out);
/* {"valid": bool, "failing_facet": [labels] | null, "reason": str} */
PLS_API pls_status pls_charmap_verify_json(const pls_complex* k, const pls_charmap* c,
                                           unsigned threads, char** out);
/* *out is NULL (with PLS_OK) when the exhaustive search finds nothing.
 * bound <= 0 for PLS_RING_INT means: bound 1, then bound 2. */
PLS_API pls_status pls_charmap_search(const pls_complex* k, pls_ring ring, int bound,
                                      unsigned threads, pls_charmap** out);
PLS_API pls_status pls_charmap_wedge_propagate(const pls_complex* k, const pls_charmap* c,
                                               const char* vertex, pls_charmap** out);
PLS_API pls_status pls_charmap_stellar_propagate(const pls_complex* k, const pls_charmap* c,
                                                 const char* face, pls_charmap** out);

/* ---- seed constructions -------------------------------------------------- */

/* Members of Picard number p (3..5); evidence reports when with_evidence. */
PLS_API pls_status pls_family_generate(int p, int with_evidence, uint64_t face_budget,
                                       unsigned threads, pls_family** out);
/* Single-member family holding the J = (2,2,2,1,1) pentagon construction. */
PLS_API pls_status pls_family_remark(int with_evidence, uint64_t face_budget, pls_family** out);
/* Single member: doubles the comma-separated vertices of k (a seed) and
 * subdivides; the certificate is searched when c is NULL. */
PLS_API pls_status pls_family_theorem_seed(const pls_complex* k, const pls_charmap* c,
                                           const char* doubled, pls_family** out);
PLS_API void pls_family_free(pls_family* f);
PLS_API size_t pls_family_size(const pls_family* f);
/* Borrowed handles, valid while f lives. */
PLS_API const pls_complex* pls_family_complex(const pls_family* f, size_t i);
PLS_API const pls_charmap* pls_family_certificate(const pls_family* f, size_t i);
/* {"name", "m", "n", "p", "seed", "non_suspended", "polytopal_by_construction",
 *  "certificate_valid", "certificate_mod2_valid", "inequality", "trace", "evidence"} */
PLS_API pls_status pls_family_member_json(const pls_family* f, size_t i, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PLS_PLS_H */

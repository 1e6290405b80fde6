#ifndef TGF_H
#define TGF_H

/*
 * tgf: exact arithmetic for a group of piecewise-linear homeomorphisms of
 * the real line (power-of-two slopes, dyadic breakpoints, integer
 * translation tails), its automorphisms, and the integer linear algebra
 * used to separate twisted conjugacy classes.
 *
 * Conventions:
 *  - Every object lives behind an opaque handle created by a *_parse or
 *    operation call and released by the matching *_free.
 *  - Functions return TGF_OK on success.  On failure the handle/output is
 *    untouched and tgf_last_error() returns a JSON object
 *    {"error":"<code>","detail":"<message>"} for the calling thread,
 *    valid until the next failing call on that thread.
 *  - Strings returned through char** out-parameters are heap-allocated;
 *    release them with tgf_string_free.
 *  - Documents are JSON: see the README for the element, word, matrix and
 *    vector formats.  Dyadic scalars use the text form INT or INT"/2^"UINT.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tgf_status {
  TGF_OK = 0,
  TGF_ERR_PARSE = 1,
  TGF_ERR_NON_DYADIC = 2,
  TGF_ERR_NON_MONOTONE = 3,
  TGF_ERR_BAD_SLOPE = 4,
  TGF_ERR_TAIL_MISMATCH = 5,
  TGF_ERR_PERIOD_SEED_MISMATCH = 6,
  TGF_ERR_WINDOW_INCONSISTENCY = 7,
  TGF_ERR_PROBE_MISMATCH = 8,
  TGF_ERR_NOT_AUTOMORPHISM = 9,
  TGF_ERR_DIMENSION_MISMATCH = 10,
  TGF_ERR_NULL_ARGUMENT = 11,
  TGF_ERR_INTERNAL = 12
} tgf_status;

typedef struct tgf_fmap tgf_fmap;       /* group element */
typedef struct tgf_tlike tgf_tlike;     /* eventually periodic conjugator */
typedef struct tgf_autword tgf_autword; /* automorphism word */
typedef struct tgf_matrix tgf_matrix;   /* integer matrix */

/* Stable name of a status code ("ok", "bad_slope", ...). */
const char* tgf_status_name(tgf_status status);
/* JSON description of the last failure on this thread. */
const char* tgf_last_error(void);

void tgf_string_free(char* s);

/* ---- lifecycle -------------------------------------------------------- */

tgf_status tgf_fmap_parse(const char* json, tgf_fmap** out);
tgf_status tgf_fmap_format(const tgf_fmap* f, char** json_out);
void tgf_fmap_free(tgf_fmap* f);

tgf_status tgf_tlike_parse(const char* json, tgf_tlike** out);
tgf_status tgf_tlike_format(const tgf_tlike* g, char** json_out);
void tgf_tlike_free(tgf_tlike* g);

tgf_status tgf_autword_parse(const char* json, tgf_autword** out);
tgf_status tgf_autword_format(const tgf_autword* w, char** json_out);
void tgf_autword_free(tgf_autword* w);

tgf_status tgf_matrix_parse(const char* json, tgf_matrix** out);
tgf_status tgf_matrix_format(const tgf_matrix* a, char** json_out);
void tgf_matrix_free(tgf_matrix* a);

/* ---- piecewise-linear maps -------------------------------------------- */

tgf_status tgf_fmap_eval(const tgf_fmap* f, const char* x, char** y_out);
tgf_status tgf_tlike_eval(const tgf_tlike* g, const char* x, char** y_out);
/* out = f o h */
tgf_status tgf_fmap_compose(const tgf_fmap* f, const tgf_fmap* h,
                            tgf_fmap** out);
tgf_status tgf_fmap_invert(const tgf_fmap* f, tgf_fmap** out);
tgf_status tgf_tlike_invert(const tgf_tlike* g, tgf_tlike** out);
/* The same map with periodic tails. */
tgf_status tgf_fmap_embed(const tgf_fmap* f, tgf_tlike** out);

/* ---- group layer ------------------------------------------------------ */

/* Abelianization: the pair of tail translations. */
tgf_status tgf_fmap_ab(const tgf_fmap* f, int64_t* l_out, int64_t* r_out);
/* Conjugation by x -> -x. */
tgf_status tgf_fmap_rev(const tgf_fmap* f, tgf_fmap** out);
/* out = g o f o g^-1; tail translations are preserved. */
tgf_status tgf_fmap_conjugate(const tgf_fmap* f, const tgf_tlike* g,
                              tgf_fmap** out);
tgf_status tgf_aut_apply(const tgf_autword* w, const tgf_fmap* f,
                         tgf_fmap** out);
/* Induced 2x2 matrix on the abelianization (probe cross-checked). */
tgf_status tgf_aut_h1_matrix(const tgf_autword* w, tgf_matrix** out);
/* Complete abelianized invariant of f's twisted class under w; a JSON
 * array of decimal strings. */
tgf_status tgf_project_class(const tgf_fmap* f, const tgf_autword* w,
                             char** rep_json_out);

/* ---- integer linear algebra ------------------------------------------- */

tgf_status tgf_matrix_identity(uint32_t n, tgf_matrix** out);
tgf_status tgf_matrix_sub(const tgf_matrix* a, const tgf_matrix* b,
                          tgf_matrix** out);
/* Determinant as a decimal string. */
tgf_status tgf_matrix_det(const tgf_matrix* a, char** det_out);
/* Smith normal form: u*a*v == d, u and v unimodular, d diagonal with a
 * divisibility chain.  Deterministic for a given input. */
tgf_status tgf_matrix_snf(const tgf_matrix* a, tgf_matrix** u_out,
                          tgf_matrix** d_out, tgf_matrix** v_out);
/* {"torsion":["2","6"],"free_rank":1} for the cokernel of a. */
tgf_status tgf_matrix_coker(const tgf_matrix* a, char** json_out);
/* *infinite_out = 1 and *count_out = NULL when det(I - a) == 0; otherwise
 * *infinite_out = 0 and *count_out = |det(I - a)| as a decimal string. */
tgf_status tgf_matrix_reidemeister(const tgf_matrix* a, int* infinite_out,
                                   char** count_out);
/* u ~ v iff u - v lies in the image of I - a.  Vectors are JSON arrays. */
tgf_status tgf_twisted_equiv(const tgf_matrix* a, const char* u_json,
                             const char* v_json, int* equivalent_out);
/* Canonical representative coordinates of v's twisted class. */
tgf_status tgf_class_rep(const tgf_matrix* a, const char* v_json,
                         char** rep_json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TGF_H */

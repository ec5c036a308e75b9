#ifndef STRICTMODAL_H
#define STRICTMODAL_H

/* C interface to the strictmodal core.  All objects are opaque; every
 * function returns a status code and reports results through out
 * parameters.  Strings handed out are heap copies; release them with
 * sm_string_free.  On failure the thread's last-error message is set. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sm_status {
  SM_OK = 0,
  SM_ERR_PARSE = 1, /* malformed formula, model, proof, or frame text */
  SM_ERR_LIMIT = 2, /* a search or size cap was exceeded */
  SM_ERR_ARG = 3    /* invalid argument or unusable input */
} sm_status;

const char* sm_version(void);

/* Message from the most recent failing call on this thread. */
const char* sm_last_error(void);

void sm_string_free(char* s);

/* ---- formulas ---- */

typedef struct sm_formula sm_formula;

sm_status sm_formula_parse(const char* text, sm_formula** out);
/* resugar != 0 folds definable connectives back into T, F, &, <->, ==. */
sm_status sm_formula_print(const sm_formula* f, int resugar, char** out);
void sm_formula_free(sm_formula* f);

/* ---- algebraic models ---- */

typedef struct sm_model sm_model;

sm_status sm_model_parse(const char* text, sm_model** out);
/* The built-in two-atom model whose box operation is not monotone. */
sm_status sm_model_builtin_countermodel(sm_model** out);
sm_status sm_model_print(const sm_model* m, char** out);
void sm_model_free(sm_model* m);

/* cls is one of "base", "s3", "s4", "s5".  all_pass gets 1 when every
 * condition line in the report passes.  The report has one line per
 * condition, plus a class line for the stricter classes. */
sm_status sm_model_check(const sm_model* m, const char* cls, int* all_pass, char** report);
sm_status sm_model_monotonic(const sm_model* m, int* monotonic, unsigned* lower, unsigned* upper);

/* assign_text uses the assignment syntax, e.g. "x1=2 x2=3"; empty or NULL
 * means all variables default to bottom. */
sm_status sm_eval(const sm_model* m, const char* assign_text, const sm_formula* f,
                  unsigned* value, int* designated);
/* witness gets the least refuting assignment when invalid, else NULL. */
sm_status sm_valid(const sm_model* m, const sm_formula* f, int* valid, char** witness);
sm_status sm_consequence(const sm_model* m, const sm_formula* const* hyps, size_t hyp_count,
                         const sm_formula* f, int* holds, char** witness);

/* ---- model search ---- */

sm_status sm_enumerate_count(unsigned atoms, const char* cls, uint64_t* count);
/* Models in enumeration order, joined by "---\n". */
sm_status sm_enumerate_emit(unsigned atoms, const char* cls, char** out);
sm_status sm_find_countermodel(const sm_formula* f, unsigned max_atoms, const char* cls,
                               int* found, char** model_text, char** witness);

/* ---- derivations ---- */

typedef struct sm_proof sm_proof;

/* A proof object holds one or more derivations ("---" separated). */
sm_status sm_proof_parse(const char* text, sm_proof** out);
sm_status sm_proof_print(const sm_proof* p, char** out);
size_t sm_proof_count(const sm_proof* p);
void sm_proof_free(sm_proof* p);

/* system overrides any per-derivation header when non-NULL; a derivation
 * with neither fails with SM_ERR_ARG.  ok gets 1 when every derivation
 * checks; the report carries one verdict block per derivation. */
sm_status sm_proof_check(const sm_proof* p, const char* system, int* ok, char** report);

/* Deduction-theorem transform.  p must hold a single derivation that
 * checks under the resolved system with discharge among its hypotheses
 * (or none, in which case it is vacuously discharged). */
sm_status sm_proof_deduce(const sm_proof* p, const char* system, const sm_formula* discharge,
                          sm_proof** out);

/* name: "lemma2" (one argument), "lemma3" (two), "s3-identity" (none).
 * Emits ready-to-check derivation text. */
sm_status sm_fixture(const char* name, const sm_formula* const* args, size_t arg_count,
                     char** out);

/* ---- relational models ---- */

typedef struct sm_kripke sm_kripke;

sm_status sm_kripke_parse(const char* text, sm_kripke** out);
sm_status sm_kripke_print(const sm_kripke* k, char** out);
void sm_kripke_free(sm_kripke* k);
sm_status sm_kripke_valid(const sm_kripke* k, const sm_formula* f, int* valid,
                          unsigned* witness_world);
sm_status sm_kripke_search(const sm_formula* f, unsigned max_worlds, int* found,
                           char** model_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STRICTMODAL_H */

/* Copyright 2026 The glim Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the glim library. Objects are opaque handles released with
 * their *_free function; every fallible call returns a glim_status and, on
 * failure, leaves a message retrievable with glim_last_error_message() on the
 * calling thread. Text results are glim_text handles.
 */

#ifndef GLIM_GLIM_H_
#define GLIM_GLIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GLIM_BUILDING_LIBRARY)
#define GLIM_API __declspec(dllexport)
#else
#define GLIM_API __declspec(dllimport)
#endif
#else
#define GLIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum glim_status {
  GLIM_OK = 0,
  GLIM_ERR_DOMAIN = 1,       /* precondition or partial-operation domain */
  GLIM_ERR_PARSE = 2,        /* malformed text input */
  GLIM_ERR_SIZE = 3,         /* enumeration guard exceeded */
  GLIM_ERR_PRESENTATION = 4, /* filter presentation is not a measure */
  GLIM_ERR_IO = 5,           /* file could not be read */
  GLIM_ERR_INVALID_ARGUMENT = 6, /* null handle or bad enum */
  GLIM_ERR_INTERNAL = 7      /* a checked invariant failed: a bug */
} glim_status;

typedef struct glim_text glim_text;
typedef struct glim_structure glim_structure;
typedef struct glim_formula glim_formula;
typedef struct glim_family glim_family;
typedef struct glim_lattice glim_lattice;
typedef struct glim_measure glim_measure;

/* Message of the last failure on this thread; empty after a success. */
GLIM_API const char* glim_last_error_message(void);
GLIM_API const char* glim_version(void);

GLIM_API const char* glim_text_data(const glim_text* text);
GLIM_API size_t glim_text_size(const glim_text* text);
GLIM_API void glim_text_free(glim_text* text);

/* --- structures and formulas ------------------------------------------- */

GLIM_API glim_status glim_structure_parse(const char* text,
                                          glim_structure** out);
GLIM_API glim_status glim_structure_load(const char* path,
                                         glim_structure** out);
GLIM_API glim_status glim_structure_format(const glim_structure* s,
                                           glim_text** out);
GLIM_API void glim_structure_free(glim_structure* s);

/* Families: "fence" names the built-in poset family; any other name is
 * read as a directory of numbered structure files. */
GLIM_API glim_status glim_family_open(const char* name, glim_family** out);
GLIM_API glim_status glim_family_member(const glim_family* family,
                                        size_t index, glim_structure** out);
GLIM_API void glim_family_free(glim_family* family);

/* Parses against `signature_source`'s signature. */
GLIM_API glim_status glim_formula_parse(const char* text,
                                        const glim_structure* signature_source,
                                        glim_formula** out);
/* The maximal-but-not-maximum formula over lt/2, or its negation. */
GLIM_API glim_status glim_formula_builtin(const char* name, glim_formula** out);
/* Comma-separated free variables in first-occurrence order. */
GLIM_API glim_status glim_formula_free_vars(const glim_formula* f,
                                            glim_text** out);
GLIM_API glim_status glim_formula_format(const glim_formula* f,
                                         glim_text** out);
GLIM_API void glim_formula_free(glim_formula* f);

typedef struct glim_pairing {
  uint64_t count;
  uint64_t total;
  glim_text* classical; /* canonical rational */
  glim_text* gamma;     /* canonical Γ value */
} glim_pairing;

/* `vars` is a comma-separated context, or NULL / "" for the free
 * variables of the formula. The caller frees both text fields. */
GLIM_API glim_status glim_pair(const glim_structure* s, const glim_formula* f,
                               const char* vars, glim_pairing* out);

/* ∫ of the assignment distribution over the satisfying set, as Γ text. */
GLIM_API glim_status glim_integrate(const glim_structure* s,
                                    const glim_formula* f, const char* vars,
                                    glim_text** out);

/* Writes the CSV table (header `index,count,total,classical,gamma`) to
 * `csv` and the verdict line to `verdict`. Closed forms are used for the
 * fence family when the formula is recognized. */
GLIM_API glim_status glim_converge(const glim_family* family,
                                   const glim_formula* f, const char* vars,
                                   size_t horizon, glim_text** csv,
                                   glim_text** verdict);

/* --- lattices and measures --------------------------------------------- */

GLIM_API glim_status glim_lattice_load(const char* path, glim_lattice** out);
GLIM_API glim_status glim_lattice_parse(const char* text, glim_lattice** out);
GLIM_API size_t glim_lattice_size(const glim_lattice* l);
GLIM_API void glim_lattice_free(glim_lattice* l);

GLIM_API glim_status glim_measure_load(const char* path, glim_measure** out);
/* `OK\n` or one `FAIL kind a=.. b=..` line per violation; *valid is set
 * to 1 or 0. */
GLIM_API glim_status glim_measure_check(const glim_measure* m, int* valid,
                                        glim_text** report);
GLIM_API void glim_measure_free(glim_measure* m);

/* PL formula evaluation: `1` or `0` in *result. */
GLIM_API glim_status glim_pl_eval_measure(const glim_measure* m,
                                          const char* formula, int* result);
GLIM_API glim_status glim_pl_eval_structure(const glim_structure* s,
                                            const char* formula, int* result);

/* `HOLDS`, or the first countermodel in measure-file format behind a
 * `# countermodel` comment line; *holds is 1 or 0. */
GLIM_API glim_status glim_entail(const glim_lattice* l, int k, const char* lhs,
                                 const char* rhs, int* holds,
                                 glim_text** report);

/* One `Lx instances=N countermodels=C` line per rule, then the total. */
GLIM_API glim_status glim_soundness(const glim_lattice* l, int k,
                                    unsigned workers, int* sound,
                                    glim_text** report);

/* 0 for either bound keeps the default. */
GLIM_API glim_status glim_duality_verify(size_t max_n, size_t max_m,
                                         int* pass, glim_text** report);

/* --- Γ values ---------------------------------------------------------- */

/* Canonical form of a Γ value. */
GLIM_API glim_status glim_gamma_normalize(const char* text, glim_text** out);
/* op is one of "mip", "miss", "plus". */
GLIM_API glim_status glim_gamma_apply(const char* op, const char* x,
                                      const char* y, glim_text** out);
/* -1, 0 or 1. */
GLIM_API glim_status glim_gamma_compare(const char* x, const char* y,
                                        int* out);

#ifdef __cplusplus
}
#endif

#endif /* GLIM_GLIM_H_ */

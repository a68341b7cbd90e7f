/*
 * C interface to libfocs: exact canonical Jordan bases (flipped orthogonal,
 * conjugate symmetric, i-FOCS) for real H-selfadjoint matrices.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Strings returned through char** are allocated by
 * the library and released with focs_string_free. Every fallible call returns
 * a focs_status; on failure focs_last_error() describes the problem for the
 * calling thread.
 */
#ifndef FOCS_FOCS_H
#define FOCS_FOCS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FOCS_BUILDING_LIBRARY)
#    define FOCS_API __declspec(dllexport)
#  else
#    define FOCS_API __declspec(dllimport)
#  endif
#else
#  define FOCS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum focs_status {
  FOCS_OK = 0,
  FOCS_ERR_PARSE = 1,
  FOCS_ERR_DIMENSION_MISMATCH = 2,
  FOCS_ERR_DIVISION_BY_ZERO = 3,
  FOCS_ERR_SINGULAR = 4,
  FOCS_ERR_INCONSISTENT = 5,
  FOCS_ERR_NOT_HERMITIAN = 6,
  FOCS_ERR_NOT_SELFADJOINT = 7,
  FOCS_ERR_IRRATIONAL_SPECTRUM = 8,
  FOCS_ERR_NONCONSTRUCTIBLE_SCALING = 9,
  FOCS_ERR_BAD_SIGNATURE = 10,
  FOCS_ERR_BAD_GAMMA = 11,
  FOCS_ERR_GENERATOR_EXHAUSTED = 12,
  FOCS_ERR_INVALID_ARGUMENT = 13,
  FOCS_ERR_INTERNAL = 14,
  FOCS_ERR_IO = 15
} focs_status;

typedef enum focs_verify_mode {
  FOCS_MODE_FO = 0,
  FOCS_MODE_CS = 1,
  FOCS_MODE_FOCS = 2,
  FOCS_MODE_AFFILIATION = 3
} focs_verify_mode;

typedef enum focs_canonical_kind {
  FOCS_CANONICAL_FO = 0,   /* complex (J, P), gamma = 1 pairing */
  FOCS_CANONICAL_REAL = 1, /* real (J_R, P) */
  FOCS_CANONICAL_IFOCS = 2 /* complex (J, P), i-conjugate symmetric */
} focs_canonical_kind;

typedef struct focs_matrix focs_matrix;
typedef struct focs_pair focs_pair;
typedef struct focs_canonical focs_canonical;
typedef struct focs_certificate focs_certificate;

/* Error reporting */
FOCS_API const char* focs_status_name(focs_status status);
FOCS_API const char* focs_last_error(void);
FOCS_API void focs_string_free(char* s);

/* Matrices: JSON object {"rows", "cols", "entries"} with scalar strings.
 * A document with a "basis" member (canonical output) yields that basis. */
FOCS_API focs_status focs_matrix_from_json(const char* json, focs_matrix** out);
FOCS_API focs_status focs_matrix_to_json(const focs_matrix* m, char** out);
FOCS_API size_t focs_matrix_rows(const focs_matrix* m);
FOCS_API size_t focs_matrix_cols(const focs_matrix* m);
/* Entry (i, j), zero-based, in the scalar text grammar. */
FOCS_API focs_status focs_matrix_entry(const focs_matrix* m, size_t i, size_t j, char** out);
FOCS_API void focs_matrix_free(focs_matrix* m);

/* Pairs: JSON object {"A": <matrix>, "H": <matrix>}. */
FOCS_API focs_status focs_pair_from_json(const char* json, focs_pair** out);
FOCS_API focs_status focs_pair_from_matrices(const focs_matrix* a, const focs_matrix* h, focs_pair** out);
FOCS_API focs_status focs_pair_to_json(const focs_pair* pair, char** out);
FOCS_API void focs_pair_free(focs_pair* pair);

/* Spectrum, Jordan structure and sign characteristic as JSON. */
FOCS_API focs_status focs_analyze(const focs_pair* pair, char** out_json);

/* Canonical pairs. */
FOCS_API focs_status focs_canonical_compute(const focs_pair* pair, focs_canonical_kind kind, focs_canonical** out);
FOCS_API focs_status focs_canonical_to_json(const focs_canonical* c, char** out);
/* Copies of the pieces; release with focs_matrix_free. */
FOCS_API focs_status focs_canonical_basis(const focs_canonical* c, focs_matrix** out);
FOCS_API focs_status focs_canonical_jordan(const focs_canonical* c, focs_matrix** out);
FOCS_API focs_status focs_canonical_sip(const focs_canonical* c, focs_matrix** out);
FOCS_API void focs_canonical_free(focs_canonical* c);

/* Certification of a user-supplied basis. gamma may be NULL (mode default). */
FOCS_API focs_status focs_verify(const focs_pair* pair, const focs_matrix* basis, focs_verify_mode mode,
                                 const char* gamma, focs_certificate** out);
/* 1 if every check passed, 0 otherwise. */
FOCS_API int focs_certificate_passed(const focs_certificate* cert);
FOCS_API focs_status focs_certificate_to_json(const focs_certificate* cert, char** out);
FOCS_API void focs_certificate_free(focs_certificate* cert);

/* Deterministic pair generation from a JordanSpec document (optional "signs"). */
FOCS_API focs_status focs_generate(const char* spec_json, uint64_t seed, int bound, char** out_json);

/* Golden corpus; *all_passed is set to 1 when every item passes. */
FOCS_API focs_status focs_selftest(char** out_json, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* FOCS_FOCS_H */

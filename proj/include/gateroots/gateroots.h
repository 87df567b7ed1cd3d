/*
 * C interface to the gateroots library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Strings returned through `char** out` are
 * allocated by the library and released with gr_string_free. Every fallible
 * call returns a gr_status; on failure a message describing the error is
 * available from gr_last_error() on the same thread until the next call.
 */
#ifndef GATEROOTS_H
#define GATEROOTS_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GATEROOTS_BUILDING)
#    define GATEROOTS_API __declspec(dllexport)
#  else
#    define GATEROOTS_API __declspec(dllimport)
#  endif
#else
#  define GATEROOTS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gr_status {
  GR_OK = 0,
  GR_ERR_PARSE = 1,            /* malformed gate expression or JSON */
  GR_ERR_INVALID_ARGUMENT = 2, /* null pointer, bad enum, bad input data */
  GR_ERR_DOMAIN = 3,           /* mathematical precondition violated */
  GR_ERR_INTERNAL = 4
} gr_status;

typedef enum gr_format { GR_FORMAT_TEXT = 0, GR_FORMAT_JSON = 1, GR_FORMAT_LATEX = 2 } gr_format;

typedef enum gr_root_method {
  GR_ROOT_AUTO = 0,    /* closed form for involutions, spectral otherwise */
  GR_ROOT_CLOSED = 1,  /* closed involution form; GR_ERR_DOMAIN otherwise */
  GR_ROOT_SPECTRAL = 2 /* principal spectral root */
} gr_root_method;

typedef struct gr_expr gr_expr;
typedef struct gr_matrix gr_matrix;
typedef struct gr_state gr_state;
typedef struct gr_report gr_report;

GATEROOTS_API const char* gr_version(void);

/* Diagnostics for the last failed call on this thread. The offset is a byte
 * position into the parsed text, or -1 when the error has no position. */
GATEROOTS_API const char* gr_last_error(void);
GATEROOTS_API long gr_last_error_offset(void);
GATEROOTS_API const char* gr_last_error_snippet(void);

GATEROOTS_API void gr_string_free(char* s);

/* ---- gate expressions ---- */
GATEROOTS_API gr_status gr_expr_parse(const char* text, gr_expr** out);
GATEROOTS_API gr_status gr_expr_to_string(const gr_expr* expr, char** out);
GATEROOTS_API gr_status gr_expr_evaluate(const gr_expr* expr, gr_matrix** out);
GATEROOTS_API void gr_expr_free(gr_expr* expr);

/* ---- matrices ---- */
GATEROOTS_API gr_status gr_matrix_from_gate(const char* name, gr_matrix** out);
GATEROOTS_API gr_status gr_matrix_from_json(const char* json, gr_matrix** out);
GATEROOTS_API size_t gr_matrix_dim(const gr_matrix* m);
GATEROOTS_API gr_status gr_matrix_entry(const gr_matrix* m, size_t row, size_t col, double* re, double* im);
GATEROOTS_API gr_status gr_matrix_format(const gr_matrix* m, gr_format format, char** out);
GATEROOTS_API gr_status gr_matrix_is_involution(const gr_matrix* m, double tol, int* out);
/* n-th root, 1 <= n. `used` (may be NULL) receives the method applied. */
GATEROOTS_API gr_status gr_root(const gr_matrix* m, unsigned n, gr_root_method method, gr_matrix** out,
                                gr_root_method* used);
/* Hermitian generator (pi/2)(I - A) of an involution A. */
GATEROOTS_API gr_status gr_generator(const gr_matrix* m, gr_matrix** out);
GATEROOTS_API void gr_matrix_free(gr_matrix* m);

/* ---- states ---- */
/* Basis label, most significant bit first, e.g. "110". */
GATEROOTS_API gr_status gr_state_from_basis(const char* bits, gr_state** out);
/* JSON array of [re, im] pairs; renormalised if the norm is within 1e-6 of 1. */
GATEROOTS_API gr_status gr_state_from_json(const char* json, gr_state** out);
GATEROOTS_API size_t gr_state_dim(const gr_state* s);
GATEROOTS_API gr_status gr_state_amplitude(const gr_state* s, size_t index, double* re, double* im);
GATEROOTS_API gr_status gr_apply(const gr_matrix* gate, const gr_state* s, gr_state** out);
GATEROOTS_API gr_status gr_state_format(const gr_state* s, gr_format format, char** out);
GATEROOTS_API void gr_state_free(gr_state* s);

/* ---- identity verification ---- */
/* Runs every registered claim whose id starts with id_prefix (NULL or "" for
 * all) at the given tolerance. */
GATEROOTS_API gr_status gr_verify(double tol, const char* id_prefix, gr_report** out);
GATEROOTS_API int gr_report_ok(const gr_report* r);
GATEROOTS_API size_t gr_report_size(const gr_report* r);
GATEROOTS_API gr_status gr_report_format(const gr_report* r, gr_format format, char** out);
GATEROOTS_API void gr_report_free(gr_report* r);

GATEROOTS_API gr_status gr_claims_list(gr_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GATEROOTS_H */

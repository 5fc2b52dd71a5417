/* C interface to the lieindex library: exact computation of the index of
 * finite-dimensional Lie algebras and of their representations.
 *
 * Handles are opaque; every function that can fail returns an lx_status and
 * leaves a message retrievable with lx_last_error() on the calling thread.
 * Strings returned through char** are heap-allocated; release them with
 * lx_string_free().
 */
#ifndef LIEINDEX_H
#define LIEINDEX_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lx_algebra lx_algebra;

typedef enum {
  LX_OK = 0,
  LX_ERR_PARSE = 2,   /* malformed spec expression or JSON input */
  LX_ERR_MATH = 3,    /* construction or mathematical validation failed */
  LX_ERR_INVALID = 4, /* null pointer or bad configuration */
  LX_ERR_INTERNAL = 5
} lx_status;

typedef struct {
  uint64_t seed;
  int32_t trials;             /* random parameter points per generic rank */
  int64_t coeff_bound;        /* sample box [-coeff_bound, coeff_bound] */
  int32_t symbolic_threshold; /* symbolic mode when rows*cols <= this */
  int32_t force_symbolic;     /* nonzero forces exact symbolic mode */
} lx_config;

/* Fills the default configuration (seed 1, 3 trials, bound 10^6,
 * threshold 10, randomized mode). */
void lx_config_init(lx_config* cfg);

const char* lx_version(void);

/* Message describing the last failure on this thread ("" if none). */
const char* lx_last_error(void);

/* Builds an algebra from the construction mini-language, e.g. "sl(3)",
 * "mautner", "takiff(sl(2),2)", "iw(gl(3),so)", "semidirect(sl2irr(4))". */
lx_status lx_algebra_from_spec(const char* spec, lx_algebra** out);

/* Parses the JSON serialization {"dim":…,"labels":…,"brackets":…} and
 * validates the Jacobi identity. */
lx_status lx_algebra_from_json(const char* json_text, lx_algebra** out);

/* Canonical JSON serialization; load followed by save is the identity on
 * canonical documents. */
lx_status lx_algebra_to_json(const lx_algebra* alg, char** out_text);

int32_t lx_algebra_dim(const lx_algebra* alg);

void lx_algebra_free(lx_algebra* alg);

/* Index report as a JSON document:
 * {"value":…,"mode":…,"error_bound":"p/q","witness":[…],"trials":…,"seed":…}
 */
lx_status lx_algebra_index(const lx_algebra* alg, const lx_config* cfg,
                           char** out_text);

/* Runs the verification suite over claims matching filter_glob ("*" for
 * all) and returns the report document. *out_all_expected is set to 1 when
 * every executed claim matched its expected verdict, else 0. */
lx_status lx_suite_run(const lx_config* cfg, const char* filter_glob,
                       char** out_text, int32_t* out_all_expected);

void lx_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LIEINDEX_H */

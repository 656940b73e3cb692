#ifndef LNZ_LNZ_H
#define LNZ_LNZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(LNZ_BUILDING_LIBRARY)
#define LNZ_API __attribute__((visibility("default")))
#else
#define LNZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lnz_status {
  LNZ_OK = 0,
  LNZ_E_DIMENSION_MISMATCH,
  LNZ_E_NOT_NILPOTENT,
  LNZ_E_NON_NILPOTENT,
  LNZ_E_SYNTAX,
  LNZ_E_INDEX,
  LNZ_E_DUPLICATE_ENTRY,
  LNZ_E_INDEX_OUT_OF_RANGE,
  LNZ_E_ELEMENT_IN_DERIVED,
  LNZ_E_DIMENSION_TOO_SMALL,
  LNZ_E_PARITY,
  LNZ_E_INADMISSIBLE_PARAMS,
  LNZ_E_UNKNOWN_FAMILY,
  LNZ_E_SINGULAR_CHANGE,
  LNZ_E_RESTRICTION_VIOLATED,
  LNZ_E_EPSILON_MISMATCH,
  LNZ_E_DIVISION_BY_ZERO,
  LNZ_E_INVALID_ARGUMENT,
  LNZ_E_NOT_IN_CATALOG_FORM,
  LNZ_E_INTERNAL
} lnz_status;

typedef enum lnz_verdict { LNZ_EQUIVALENT = 0, LNZ_DISTINCT = 1, LNZ_UNKNOWN = 3 } lnz_verdict;

typedef struct lnz_algebra lnz_algebra;
typedef struct lnz_change lnz_change;

/* Message of the last failed call on this thread; never NULL. */
LNZ_API const char* lnz_last_error(void);
/* Line and column of the last syntax error on this thread, 0 if unknown. */
LNZ_API void lnz_last_error_position(int* line, int* column);
LNZ_API const char* lnz_status_name(lnz_status status);

/* Every char** result is heap-allocated and released with lnz_string_free. */
LNZ_API void lnz_string_free(char* s);

LNZ_API lnz_status lnz_algebra_parse(const char* text, lnz_algebra** out);
LNZ_API void lnz_algebra_free(lnz_algebra* a);
LNZ_API lnz_status lnz_algebra_serialize(const lnz_algebra* a, char** out);
LNZ_API lnz_status lnz_algebra_dim(const lnz_algebra* a, size_t* out);

/* Leibniz residual: number of violated triples and one text line per triple. */
LNZ_API lnz_status lnz_check(const lnz_algebra* a, size_t* violations, char** listing);

/* JSON with nilindex, central-series dims, gradation dims, char-sequence
   estimate and right-annihilator basis. */
LNZ_API lnz_status lnz_analyze(const lnz_algebra* a, size_t budget, uint64_t seed, char** json);

/* type 2: params are alpha1..alpha4 and family is a row label such as "0.3";
   type 1: params are the three slots and family is "34".."41".
   beta may be NULL (defaults to the row's value). */
LNZ_API lnz_status lnz_catalog_build(int type, const char* family, size_t n, const char* const* params,
                                     size_t count, int epsilon, const char* beta, lnz_algebra** out);
LNZ_API lnz_status lnz_catalog_index(char** out);

LNZ_API lnz_status lnz_change_parse(const char* text, lnz_change** out);
LNZ_API void lnz_change_free(lnz_change* c);
LNZ_API lnz_status lnz_transform(const lnz_algebra* a, const lnz_change* c, lnz_algebra** out);

/* p and q hold 4 values (alpha1..alpha4, beta = -1) or 5 (with beta). The
   witness is checked by transporting the dimension-n algebra. */
LNZ_API lnz_status lnz_equiv(int epsilon, size_t n, const char* const* p, size_t p_count, const char* const* q,
                             size_t q_count, unsigned budget, lnz_verdict* verdict, char** detail);

/* Empty dims/samples select the defaults. */
LNZ_API lnz_status lnz_verify_all(const size_t* dims, size_t dim_count, const char* const* samples,
                                  size_t sample_count, size_t budget, uint64_t seed, int* all_pass, char** text,
                                  char** json);

#ifdef __cplusplus
}
#endif

#endif

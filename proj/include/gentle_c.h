#ifndef GENTLE_C_H
#define GENTLE_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(GENTLE_BUILDING_LIBRARY)
#define GENTLE_API __attribute__((visibility("default")))
#else
#define GENTLE_API
#endif

typedef struct gentle_algebra gentle_algebra;

typedef enum {
  GENTLE_OK = 0,
  GENTLE_DOMAIN_ERROR = 1, /* bad input: parse error, non-gentle algebra, invalid word, missing file */
  GENTLE_USAGE_ERROR = 2,  /* null or out-of-range arguments */
  GENTLE_INTERNAL_ERROR = 3
} gentle_status;

/* Output flags, or-ed together. */
enum {
  GENTLE_JSON = 1,
  GENTLE_PARALLEL = 2,
  GENTLE_DOT = 4,
  GENTLE_VERIFY = 8,
  GENTLE_PROFILE = 16
};

/* Message for the last failing call on this thread; empty after a success. */
GENTLE_API const char* gentle_last_error(void);
/* Strings returned through char** out parameters are owned by the caller. */
GENTLE_API void gentle_string_free(char* s);

GENTLE_API gentle_status gentle_algebra_load(const char* path, gentle_algebra** out);
GENTLE_API gentle_status gentle_algebra_parse(const char* text, gentle_algebra** out);
GENTLE_API void gentle_algebra_free(gentle_algebra* a);
GENTLE_API gentle_status gentle_algebra_dimension(const gentle_algebra* a, int* out);

/* dim Hom(X, Y[n]); objects are "word" or "word@shift", bands take the scalar (NULL means 1). */
GENTLE_API gentle_status gentle_hom_dim(const gentle_algebra* a, const char* from, const char* to, const char* scalar,
                                        int n, int* out);

/* Rendered command output (text, or JSON with GENTLE_JSON). */
GENTLE_API gentle_status gentle_validate(const gentle_algebra* a, unsigned flags, char** out);
GENTLE_API gentle_status gentle_threads(const gentle_algebra* a, unsigned flags, char** out);
GENTLE_API gentle_status gentle_ag(const gentle_algebra* a, unsigned flags, char** out);
GENTLE_API gentle_status gentle_hom(const gentle_algebra* a, const char* from, const char* to, const char* scalar,
                                    unsigned flags, char** out);
GENTLE_API gentle_status gentle_alp(const gentle_algebra* a, const char* from, const char* to, unsigned flags,
                                    char** out);
GENTLE_API gentle_status gentle_cycles(const gentle_algebra* a, unsigned flags, char** out);
GENTLE_API gentle_status gentle_band(const gentle_algebra* a, const char* band, const char* scalar, unsigned flags,
                                     char** out);
/* Bounds <= 0 select the defaults. */
GENTLE_API gentle_status gentle_search(const gentle_algebra* a, int max_letters, int shift_window, unsigned flags,
                                       char** out);
/* passed is set to 1 when every property suite holds. */
GENTLE_API gentle_status gentle_selftest(uint64_t seed, unsigned flags, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif

#ifndef TRANSFACT_H
#define TRANSFACT_H

#include <stddef.h>

#if defined(_WIN32)
#define TF_API __declspec(dllexport)
#else
#define TF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tf_context tf_context;

typedef enum tf_status {
  TF_OK = 0,
  TF_INVALID_ARGUMENT = 1,
  TF_DEGREE_MISMATCH = 2,
  TF_PARSE_ERROR = 3,
  TF_GUARD_EXCEEDED = 4,
  TF_PRECONDITION = 5,
  TF_UNSUPPORTED = 6,
  TF_MISSING_COUNTS = 7,
  TF_IO_ERROR = 8,
  TF_INTERNAL = 9
} tf_status;

TF_API const char* tf_version(void);
TF_API const char* tf_status_name(tf_status status);

/* A context owns the worker budget, the count cache and the last error. */
TF_API tf_context* tf_context_create(void);
TF_API void tf_context_destroy(tf_context* ctx);
TF_API tf_status tf_context_set_jobs(tf_context* ctx, int jobs);
/* path NULL: use $TRANSFACT_CACHE_DIR/counts.json if set, else no file. */
TF_API tf_status tf_context_set_cache(tf_context* ctx, const char* path);
/* Empty string when the last call succeeded. Owned by ctx. */
TF_API const char* tf_context_last_error(const tf_context* ctx);
/* Newline-separated cache warnings since the previous call; free with tf_string_free. */
TF_API tf_status tf_context_take_warnings(tf_context* ctx, char** out);

/*
 * Every *out below receives a NUL-terminated JSON document (except
 * tf_count_table_csv) that the caller releases with tf_string_free.
 * alpha is a list of positive parts in any order.
 */
TF_API tf_status tf_count(tf_context* ctx, int k, const int* alpha, size_t parts, int use_search, char** out);
TF_API tf_status tf_hurwitz(tf_context* ctx, const int* alpha, size_t parts, char** out);
TF_API tf_status tf_wseries(tf_context* ctx, int k, int order, char** out);
TF_API tf_status tf_trees(tf_context* ctx, int k, char** out);

/* *passed is 1 when the check holds, 0 otherwise. */
TF_API tf_status tf_verify_conjecture(tf_context* ctx, int k, int m, int nmax, int uncorrected, int* passed,
                                      char** out);
TF_API tf_status tf_verify_pde(tf_context* ctx, int k, int nmax, int* passed, char** out);
TF_API tf_status tf_verify_lemma22(tf_context* ctx, int k, int nmax, int* passed, char** out);
TF_API tf_status tf_verify_all(tf_context* ctx, int nmax, int* passed, char** out);

/* CSV with header alpha,n,l,mu,count. */
TF_API tf_status tf_count_table_csv(tf_context* ctx, int k, int nmax, int use_search, char** out);
TF_API tf_status tf_count_table_json(tf_context* ctx, int k, int nmax, int use_search, char** out);

/* Minimal transitive factorisations of a permutation in cycle notation. */
TF_API tf_status tf_enumerate(tf_context* ctx, int k, int degree, const char* permutation, size_t limit,
                              char** out);
/* Product of factors in cycle notation, rightmost applied first. */
TF_API tf_status tf_multiply(tf_context* ctx, int degree, const char* const* factors, size_t count, char** out);

TF_API void tf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif

#ifndef DDREL_H
#define DDREL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DdrelKind {
  DDREL_KIND_X = 0,
  DDREL_KIND_D = 1,
} DdrelKind;

typedef enum DdrelStatus {
  DDREL_STATUS_OK = 0,
  DDREL_STATUS_NULL_POINTER = 1,
  DDREL_STATUS_INVALID_UTF8 = 2,
  DDREL_STATUS_PARSE = 3,
  DDREL_STATUS_INVALID_SPEC = 4,
  DDREL_STATUS_DEGENERATE = 5,
  DDREL_STATUS_JSON = 6,
  DDREL_STATUS_INVALID_ARGUMENT = 7,
  DDREL_STATUS_INTERNAL = 8,
} DdrelStatus;

typedef struct DdrelOperator DdrelOperator;

typedef struct DdrelRelation DdrelRelation;

typedef struct DdrelSpec DdrelSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null.
const char *ddrel_last_error(void);

// # Safety
// `s` must be null or a string returned by this library.
void ddrel_string_free(char *s);

// Parses `{family, m, lambda, mu?, upper, lower}`.
//
// # Safety
// `json` must be a nul-terminated string and `out` writable.
enum DdrelStatus ddrel_spec_from_json(const char *json, struct DdrelSpec **out);

// # Safety
// `spec` must be null or a handle from `ddrel_spec_from_json`.
void ddrel_spec_free(struct DdrelSpec *spec);

// # Safety
// `spec` must be a live handle and `out` writable.
enum DdrelStatus ddrel_relation_build(const struct DdrelSpec *spec,
                                      enum DdrelKind kind,
                                      struct DdrelRelation **out);

// # Safety
// `rel` must be null or a handle from `ddrel_relation_build`.
void ddrel_relation_free(struct DdrelRelation *rel);

// # Safety
// `rel` must be a live handle and `out` writable.
enum DdrelStatus ddrel_relation_is_degenerate(const struct DdrelRelation *rel, bool *out);

// # Safety
// `rel` must be a live handle and `out` writable.
enum DdrelStatus ddrel_relation_to_json(const struct DdrelRelation *rel, char **out);

// Checks `rel` on the series of `spec` for `n_min..=n_max` at order `order`.
// `passed` receives the verdict and `report_json`, when not null, the report.
//
// # Safety
// Handles must be live; `passed` writable; `report_json` null or writable.
enum DdrelStatus ddrel_relation_check(const struct DdrelRelation *rel,
                                      const struct DdrelSpec *spec,
                                      int64_t n_min,
                                      int64_t n_max,
                                      uintptr_t order,
                                      bool *passed,
                                      char **report_json);

// Parses `c_J(n)*S^J + ... + c_0(n)`.
//
// # Safety
// `text` must be a nul-terminated string and `out` writable.
enum DdrelStatus ddrel_operator_parse(const char *text, struct DdrelOperator **out);

// The product `a·b`.
//
// # Safety
// Handles must be live and `out` writable.
enum DdrelStatus ddrel_operator_mul(const struct DdrelOperator *a,
                                    const struct DdrelOperator *b,
                                    struct DdrelOperator **out);

// # Safety
// `op` must be a live handle and `out` writable.
enum DdrelStatus ddrel_operator_to_string(const struct DdrelOperator *op, char **out);

// # Safety
// `op` must be null or a handle from this library.
void ddrel_operator_free(struct DdrelOperator *op);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DDREL_H */

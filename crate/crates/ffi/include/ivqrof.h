#ifndef IVQROF_H
#define IVQROF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define IVQ_FAMILY_WEBER 0

#define IVQ_FAMILY_ALGEBRAIC 1

#define IVQ_FAMILY_FRANK 2

#define IVQ_FAMILY_HAMACHER 3

// Outcome of a call.
typedef enum IvqStatus {
  IVQ_STATUS_OK = 0,
  // A required pointer argument was null.
  IVQ_STATUS_NULL = 1,
  // An input or result is not a valid number at the given rung.
  IVQ_STATUS_INVALID_NUMBER = 2,
  // A rung, family parameter, weight or index is out of range.
  IVQ_STATUS_INVALID_PARAM = 3,
  // Two lengths that must agree do not.
  IVQ_STATUS_LENGTH = 4,
  // A JSON document or C string could not be read.
  IVQ_STATUS_PARSE = 5,
  // The decision pipeline failed.
  IVQ_STATUS_PIPELINE = 6,
  // The library panicked; this is a bug.
  IVQ_STATUS_PANIC = 7,
} IvqStatus;

// A parsed decision problem.
typedef struct IvqProblem IvqProblem;

// The result of evaluating a problem.
typedef struct IvqReport IvqReport;

// `<[mu_lo, mu_hi], [nu_lo, nu_hi]>`.
typedef struct IvqNumber {
  double mu_lo;
  double mu_hi;
  double nu_lo;
  double nu_hi;
} IvqNumber;

// Operator family: one of the `IVQ_FAMILY_*` kinds and its parameter
// (lambda, alpha or gamma; ignored for the algebraic family).
typedef struct IvqFamily {
  uint32_t kind;
  double parameter;
} IvqFamily;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the latest failure on this thread, or null after a success.
// The pointer stays valid until the next call into the library on the same
// thread.
const char *ivq_last_error_message(void);

// `IVQ_STATUS_OK` when `n` is a valid number at rung `q`,
// `IVQ_STATUS_INVALID_NUMBER` otherwise.
//
// # Safety
// `n` must be null or point to an `IvqNumber`.
enum IvqStatus ivq_number_check(const struct IvqNumber *n, double q);

// Score `(sum of membership powers - sum of non-membership powers) / 2`.
//
// # Safety
// `n` must point to an `IvqNumber` and `out` to a writable `double`.
enum IvqStatus ivq_number_score(const struct IvqNumber *n, double q, double *out);

// # Safety
// `n` must point to an `IvqNumber` and `out` to a writable `double`.
enum IvqStatus ivq_number_accuracy(const struct IvqNumber *n, double q, double *out);

// Mean absolute difference of the q-th powers, in `[0, 1]`.
//
// # Safety
// `a` and `b` must point to `IvqNumber`s and `out` to a writable `double`.
enum IvqStatus ivq_number_distance(const struct IvqNumber *a,
                                   const struct IvqNumber *b,
                                   double q,
                                   double *out);

// Writes -1, 0 or 1 as `a` ranks below, level with or above `b`.
//
// # Safety
// `a` and `b` must point to `IvqNumber`s and `out` to a writable `int`.
enum IvqStatus ivq_number_compare(const struct IvqNumber *a,
                                  const struct IvqNumber *b,
                                  double q,
                                  int32_t *out);

// `a ⊕ b` under `family`.
//
// # Safety
// `family`, `a` and `b` must be readable and `out` writable.
enum IvqStatus ivq_add(const struct IvqFamily *family,
                       const struct IvqNumber *a,
                       const struct IvqNumber *b,
                       double q,
                       struct IvqNumber *out);

// `a ⊗ b` under `family`.
//
// # Safety
// `family`, `a` and `b` must be readable and `out` writable.
enum IvqStatus ivq_mul(const struct IvqFamily *family,
                       const struct IvqNumber *a,
                       const struct IvqNumber *b,
                       double q,
                       struct IvqNumber *out);

// `k · a` for real `k > 0`.
//
// # Safety
// `family` and `a` must be readable and `out` writable.
enum IvqStatus ivq_scalar(const struct IvqFamily *family,
                          double k,
                          const struct IvqNumber *a,
                          double q,
                          struct IvqNumber *out);

// `a ^ k` for real `k > 0`.
//
// # Safety
// `family` and `a` must be readable and `out` writable.
enum IvqStatus ivq_power(const struct IvqFamily *family,
                         const struct IvqNumber *a,
                         double k,
                         double q,
                         struct IvqNumber *out);

// Ordered weighted aggregation of `len` values with `weights_len` weights
// summing to one.
//
// # Safety
// `values` and `weights` must point to arrays of the stated lengths,
// `family` must be readable and `out` writable.
enum IvqStatus ivq_owa(const struct IvqFamily *family,
                       const struct IvqNumber *values,
                       size_t len,
                       const double *weights,
                       size_t weights_len,
                       double q,
                       struct IvqNumber *out);

// Parses a problem document (the CLI's JSON format).
//
// # Safety
// `json` must be a nul-terminated string and `out` writable.
enum IvqStatus ivq_problem_from_json(const char *json, struct IvqProblem **out);

// Releases a problem. Null is ignored.
//
// # Safety
// `problem` must be null or a handle from `ivq_problem_from_json` not yet freed.
void ivq_problem_free(struct IvqProblem *problem);

// Evaluates a problem. `config_json` is a pipeline configuration document;
// null or `{}` selects the defaults (automatic rung, Weber lambda = 2,
// swing weights).
//
// # Safety
// `problem` must be a live handle, `config_json` null or a nul-terminated
// string, and `out` writable.
enum IvqStatus ivq_evaluate(const struct IvqProblem *problem,
                            const char *config_json,
                            struct IvqReport **out);

// Releases a report. Null is ignored.
//
// # Safety
// `report` must be null or a handle from `ivq_evaluate` not yet freed.
void ivq_report_free(struct IvqReport *report);

// Number of alternatives in the report.
//
// # Safety
// `report` must be a live handle and `out` writable.
enum IvqStatus ivq_report_len(const struct IvqReport *report, size_t *out);

// Rung the report was computed at.
//
// # Safety
// `report` must be a live handle and `out` writable.
enum IvqStatus ivq_report_rung(const struct IvqReport *report, double *out);

// Aggregate of alternative `i`, in problem order.
//
// # Safety
// `report` must be a live handle and `out` writable.
enum IvqStatus ivq_report_aggregate(const struct IvqReport *report,
                                    size_t i,
                                    struct IvqNumber *out);

// Normalized score of alternative `i`, in problem order.
//
// # Safety
// `report` must be a live handle and `out` writable.
enum IvqStatus ivq_report_normalized_score(const struct IvqReport *report, size_t i, double *out);

// Alternative indices from best to worst into `order`, which holds `len`
// entries; `len` must equal the number of alternatives.
//
// # Safety
// `report` must be a live handle and `order` point to `len` writable slots.
enum IvqStatus ivq_report_ranking(const struct IvqReport *report, size_t *order, size_t len);

// The full report as a JSON document, released with `ivq_string_free`.
//
// # Safety
// `report` must be a live handle and `out` writable.
enum IvqStatus ivq_report_to_json(const struct IvqReport *report, char **out);

// Releases a string returned by the library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void ivq_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IVQROF_H */

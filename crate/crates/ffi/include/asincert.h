#ifndef ASINCERT_H
#define ASINCERT_H

/* Generated by cbindgen from asincert-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * The four derivative-sign regimes of the distance `f_b - asin`.
 */
typedef enum AsincertRegime {
  ASINCERT_REGIME_DERIVATIVE_NONNEGATIVE = 0,
  ASINCERT_REGIME_HUMP = 1,
  ASINCERT_REGIME_CROSSING = 2,
  ASINCERT_REGIME_DERIVATIVE_NONPOSITIVE = 3,
} AsincertRegime;

typedef enum AsincertRelation {
  /**
   * Distance `>= 0`.
   */
  ASINCERT_RELATION_GE = 0,
  /**
   * Distance `<= 0`.
   */
  ASINCERT_RELATION_LE = 1,
} AsincertRelation;

/**
 * Status and verdict codes, mirroring the CLI exit codes where they exist.
 */
typedef enum AsincertStatus {
  /**
   * Success; for verification calls, the claim is PROVEN.
   */
  ASINCERT_STATUS_OK = 0,
  /**
   * The claim is REFUTED.
   */
  ASINCERT_STATUS_REFUTED = 1,
  /**
   * The verifier exhausted its budget, or a parameter search could not
   * decide its predicate.
   */
  ASINCERT_STATUS_UNDECIDED = 2,
  /**
   * Null pointer, malformed UTF-8, or an argument outside its domain.
   */
  ASINCERT_STATUS_INVALID_ARGUMENT = 64,
  /**
   * A certificate failed to parse or its evidence did not re-derive.
   */
  ASINCERT_STATUS_REPLAY_REJECTED = 65,
  /**
   * A panic crossed the boundary; state is unchanged.
   */
  ASINCERT_STATUS_PANIC = 70,
} AsincertStatus;

/**
 * Opaque certificate handle.
 */
typedef struct AsincertCertificate AsincertCertificate;

/**
 * Classification of one parameter value.
 */
typedef struct AsincertClassification {
  double b;
  enum AsincertRegime regime;
  double golden_ratio;
  double b1;
  double b2;
  /**
   * Stationary abscissa `d(b)`; NaN when undefined (`b` outside `[1, 2]`).
   */
  double critical_point;
  double endpoint_gap;
} AsincertClassification;

/**
 * Location and size of the maximum distance for one parameter.
 */
typedef struct AsincertGapReport {
  double b;
  double argmax_x;
  double max_gap;
  double endpoint_gap;
  enum AsincertRegime regime;
} AsincertGapReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Certifies `f_b - asin <relation> 0` on `[0, 1]` with endpoint equalities
 * detected automatically. On success `*out_certificate` owns the
 * certificate regardless of the verdict.
 *
 * # Safety
 * `out_certificate` must be a valid pointer.
 */
enum AsincertStatus asincert_verify_reduced(double b,
                                            enum AsincertRelation relation,
                                            uint32_t max_depth,
                                            struct AsincertCertificate **out_certificate);

/**
 * Certifies `phi_{a,b} - asin <relation> 0` on `[0, 1]`.
 *
 * # Safety
 * `out_certificate` must be a valid pointer.
 */
enum AsincertStatus asincert_verify_family(double a,
                                           double b,
                                           enum AsincertRelation relation,
                                           uint32_t max_depth,
                                           struct AsincertCertificate **out_certificate);

/**
 * Certifies `phi_{a1,b1} - phi_{a2,b2} <relation> 0` on `[0, 1]`.
 *
 * # Safety
 * `out_certificate` must be a valid pointer.
 */
enum AsincertStatus asincert_verify_difference(double a1,
                                               double b1,
                                               double a2,
                                               double b2,
                                               enum AsincertRelation relation,
                                               uint32_t max_depth,
                                               struct AsincertCertificate **out_certificate);

/**
 * The verdict carried by a certificate.
 *
 * # Safety
 * `certificate` must come from a verification call and not be freed.
 */
enum AsincertStatus asincert_certificate_verdict(const struct AsincertCertificate *certificate);

/**
 * Serializes a certificate to JSON. Release with [`asincert_string_free`];
 * returns null on invalid input.
 *
 * # Safety
 * `certificate` must come from a verification call and not be freed.
 */
char *asincert_certificate_json(const struct AsincertCertificate *certificate);

/**
 * Replays a serialized certificate; `Ok` means the evidence re-derives.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string.
 */
enum AsincertStatus asincert_replay_json(const char *json);

/**
 * Frees a certificate handle; null is ignored.
 *
 * # Safety
 * `certificate` must come from a verification call and not be freed twice.
 */
void asincert_certificate_free(struct AsincertCertificate *certificate);

/**
 * Frees a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void asincert_string_free(char *s);

/**
 * Classifies a parameter into its regime with the associated witnesses.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum AsincertStatus asincert_classify(double b, struct AsincertClassification *out);

/**
 * Runs both extremal parameter searches at the given tolerance
 * (`tol >= 1e-12`).
 *
 * # Safety
 * `out_b1` and `out_b2` must be valid pointers.
 */
enum AsincertStatus asincert_find_bounds(double tol, double *out_b1, double *out_b2);

/**
 * Reports the maximum of the distance for one parameter.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum AsincertStatus asincert_max_gap(double b, struct AsincertGapReport *out);

/**
 * Library version as a static string; do not free.
 */
const char *asincert_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ASINCERT_H */

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef TXRAY_H
#define TXRAY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TxrStatus {
  TXR_STATUS_OK = 0,
  TXR_STATUS_ZERO_VECTOR,
  TXR_STATUS_NON_PRIMITIVE,
  TXR_STATUS_DEGENERATE_CONE,
  TXR_STATUS_EMPTY_INPUT,
  TXR_STATUS_EMPTY_CUT,
  TXR_STATUS_DEGENERATE_CUT,
  TXR_STATUS_NOT_FULL_DIMENSIONAL,
  TXR_STATUS_INVALID_POLYGON,
  TXR_STATUS_NON_GENERIC_LAMBDA,
  TXR_STATUS_NOT_DELZANT,
  TXR_STATUS_VERTICAL_EDGE_UNSUPPORTED,
  TXR_STATUS_DUPLICATE_POSITION,
  TXR_STATUS_AMBIGUOUS_PAIRING,
  TXR_STATUS_DANGLING_WEIGHT,
  TXR_STATUS_INVALID_CHAMBER,
  TXR_STATUS_WALL_NOT_PERPENDICULAR,
  TXR_STATUS_VERTEX_ON_CUT_LINE,
  TXR_STATUS_NON_FREE_ACTION,
  TXR_STATUS_WRONG_DIMENSION_SCOPE,
  TXR_STATUS_INVALID_X_RAY,
  TXR_STATUS_INVALID_PARAMETER,
  TXR_STATUS_DOCUMENT,
  TXR_STATUS_NULL_POINTER = 100,
  TXR_STATUS_INVALID_UTF8,
  TXR_STATUS_PANIC,
} TxrStatus;

typedef struct TxrChamber TxrChamber;

typedef struct TxrVerdict TxrVerdict;

typedef struct TxrXray TxrXray;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call into the library from the same thread.
 */
const char *txr_last_error_message(void);

/**
 * Stable name of a status code.
 */
const char *txr_status_name(enum TxrStatus status);

/**
 * X-ray of the coadjoint orbit through `λ = (num[i] / den[i])`.
 */
enum TxrStatus txr_xray_flag(const int64_t *num, const int64_t *den, struct TxrXray **out);

/**
 * Decodes an X-ray document.
 */
enum TxrStatus txr_xray_from_json(const char *json, struct TxrXray **out);

/**
 * Encodes an X-ray document; free the result with `txr_string_free`.
 */
enum TxrStatus txr_xray_to_json(const struct TxrXray *x, char **out);

/**
 * Number of fixed points, or 0 for a null handle.
 */
size_t txr_xray_fixed_point_count(const struct TxrXray *x);

/**
 * Number of edges, or 0 for a null handle.
 */
size_t txr_xray_edge_count(const struct TxrXray *x);

enum TxrStatus txr_chamber_from_json(const char *json, struct TxrChamber **out);

enum TxrStatus txr_chamber_to_json(const struct TxrChamber *c, char **out);

/**
 * Cuts by `<(x, y), p> <= level_num / level_den`.
 */
enum TxrStatus txr_cut_u2(const struct TxrChamber *c,
                          int64_t x,
                          int64_t y,
                          int64_t level_num,
                          int64_t level_den,
                          struct TxrChamber **out);

enum TxrStatus txr_chamber_to_xray(const struct TxrChamber *c, struct TxrXray **out);

/**
 * `H_n` with default parameters. Either output may be null.
 */
enum TxrStatus txr_scenario_hn(int64_t n,
                               struct TxrXray **out_xray,
                               struct TxrVerdict **out_verdict);

enum TxrStatus txr_tolman_check(const struct TxrXray *x, struct TxrVerdict **out);

/**
 * 1 if an obstruction was found, 0 otherwise (including a null handle).
 */
int32_t txr_verdict_is_obstructed(const struct TxrVerdict *v);

size_t txr_verdict_certificate_count(const struct TxrVerdict *v);

enum TxrStatus txr_verdict_to_json(const struct TxrVerdict *v, char **out);

/**
 * SVG drawing of `x`, highlighting the uncovered faces of `highlight` when
 * it is not null. Free the result with `txr_string_free`.
 */
enum TxrStatus txr_render_svg(const struct TxrXray *x,
                              const struct TxrVerdict *highlight,
                              char **out);

void txr_xray_free(struct TxrXray *x);

void txr_chamber_free(struct TxrChamber *c);

void txr_verdict_free(struct TxrVerdict *v);

void txr_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TXRAY_H */

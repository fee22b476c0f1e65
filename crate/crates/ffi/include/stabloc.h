/* Copyright 2026 The stabilizer-locality Authors. Licensed under the Apache License, Version 2.0. */

#ifndef STABLOC_H
#define STABLOC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum StablocStatus {
  STABLOC_STATUS_OK = 0,
  STABLOC_STATUS_NULL_POINTER = 1,
  STABLOC_STATUS_INVALID_UTF8 = 2,
  STABLOC_STATUS_PARSE_ERROR = 3,
  STABLOC_STATUS_PARAMETER_ERROR = 4,
  STABLOC_STATUS_DIMENSION_ERROR = 5,
  STABLOC_STATUS_NON_COMMUTING = 6,
  STABLOC_STATUS_SPECIFICATION_ERROR = 7,
  STABLOC_STATUS_BUDGET_EXCEEDED = 8,
  STABLOC_STATUS_UNDEFINED_DISTANCE = 9,
  STABLOC_STATUS_INVARIANT_VIOLATED = 10,
  STABLOC_STATUS_PANIC = 11,
} StablocStatus;

/**
 * A stabilizer code.
 */
typedef struct StablocCode StablocCode;

/**
 * The classification of one bipartition.
 */
typedef struct StablocReport StablocReport;

typedef struct StablocCounts {
  size_t k;
  size_t m_a;
  size_t m_b;
  size_t m_ab;
  size_t m_phi;
  size_t g_a;
  size_t g_b;
  size_t g_sa;
  size_t g_sb;
  size_t g_sab;
} StablocCounts;

/**
 * Entropy range in bits.
 */
typedef struct StablocEntropyBounds {
  double e_min;
  double e_max;
  size_t g_sab;
  size_t m_phi;
} StablocEntropyBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after a
 * success. Valid until the next call into this library on the same thread.
 */
const char *stabloc_last_error_message(void);

/**
 * Parses a code file (`qubits N` followed by `stab ...` lines).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum StablocStatus stabloc_code_from_text(const char *text, struct StablocCode **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum StablocStatus stabloc_code_toric(size_t l, struct StablocCode **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum StablocStatus stabloc_code_repetition(size_t n, struct StablocCode **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum StablocStatus stabloc_code_five_qubit(struct StablocCode **out);

/**
 * # Safety
 * `code` must be null or a handle from this library not yet freed.
 */
void stabloc_code_free(struct StablocCode *code);

/**
 * Number of physical qubits, or 0 for a null handle.
 *
 * # Safety
 * `code` must be null or a live handle.
 */
size_t stabloc_code_qubits(const struct StablocCode *code);

/**
 * Number of logical qubits, or 0 for a null handle.
 *
 * # Safety
 * `code` must be null or a live handle.
 */
size_t stabloc_code_logical_qubits(const struct StablocCode *code);

/**
 * Classifies the bipartition whose `A` side is `qubits[0..len]`.
 *
 * # Safety
 * `code` must be live, `qubits` must point to `len` values (may be null
 * when `len` is 0), and `out` must be writable.
 */
enum StablocStatus stabloc_classify(const struct StablocCode *code,
                                    const size_t *qubits,
                                    size_t len,
                                    struct StablocReport **out);

/**
 * As [`stabloc_classify`], with the region given in the CLI syntax
 * (`"0,1,5"` or a named Toric region such as `"toric:Qx"`).
 *
 * # Safety
 * `code` must be live, `region` nul-terminated, `out` writable.
 */
enum StablocStatus stabloc_classify_region(const struct StablocCode *code,
                                           const char *region,
                                           struct StablocReport **out);

/**
 * # Safety
 * `report` must be null or a live handle.
 */
void stabloc_report_free(struct StablocReport *report);

/**
 * # Safety
 * `report` must be live and `out` writable.
 */
enum StablocStatus stabloc_report_counts(const struct StablocReport *report,
                                         struct StablocCounts *out);

/**
 * The report as JSON, in the same schema as `stabloc classify --format json`.
 * Release the string with [`stabloc_string_free`].
 *
 * # Safety
 * `report` must be live and `out` writable.
 */
enum StablocStatus stabloc_report_json(const struct StablocReport *report, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void stabloc_string_free(char *s);

/**
 * # Safety
 * As [`stabloc_classify`], with `out` pointing to writable storage.
 */
enum StablocStatus stabloc_entropy_bounds(const struct StablocCode *code,
                                          const size_t *qubits,
                                          size_t len,
                                          struct StablocEntropyBounds *out);

/**
 * Brute-force code distance with the default search budget.
 *
 * # Safety
 * `code` must be live and `out` writable.
 */
enum StablocStatus stabloc_distance(const struct StablocCode *code, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STABLOC_H */

#ifndef QLT_H
#define QLT_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QltStatus {
  QLT_STATUS_OK = 0,
  QLT_STATUS_NULL_POINTER = 1,
  QLT_STATUS_DOMAIN = 2,
  QLT_STATUS_SHAPE = 3,
  QLT_STATUS_RESOURCE = 4,
  QLT_STATUS_DEGENERATE = 5,
  QLT_STATUS_UNSUPPORTED = 6,
  QLT_STATUS_BUFFER_TOO_SMALL = 7,
  QLT_STATUS_PANIC = 8,
} QltStatus;

typedef enum QltVariant {
  QLT_VARIANT_FULL = 0,
  QLT_VARIANT_REDUCED = 1,
} QltVariant;

/**
 * Problem description: AP diagonal, quadrature grid, signal and variant.
 */
typedef struct QltConfig QltConfig;

/**
 * Output of [`qlt_run`].
 */
typedef struct QltResult QltResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *qlt_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *qlt_version(void);

/**
 * Creates a configuration with signal `g(t) = e^{-0.9 t}`.
 *
 * The nodes are `s_x = (first_real + diff_real·x) + i(first_imag + diff_imag·x)`
 * for `x < 2^n_sys`; `m_k` and `m_t` must be powers of two.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum QltStatus qlt_config_new(double first_real,
                              double diff_real,
                              double first_imag,
                              double diff_imag,
                              size_t n_sys,
                              double k_max,
                              size_t m_k,
                              double t_max,
                              size_t m_t,
                              double beta,
                              enum QltVariant variant,
                              struct QltConfig **out);

/**
 * # Safety
 * `config` must be NULL or a handle from [`qlt_config_new`] not yet freed.
 */
void qlt_config_free(struct QltConfig *config);

/**
 * `g(t) = e^{-rate·t}`.
 *
 * # Safety
 * `config` must be a live handle.
 */
enum QltStatus qlt_config_set_exp_decay(struct QltConfig *config, double rate);

/**
 * `g(t) = e^{-rate·t} sin(frequency·t)`.
 *
 * # Safety
 * `config` must be a live handle.
 */
enum QltStatus qlt_config_set_exp_decay_sine(struct QltConfig *config,
                                             double rate,
                                             double frequency);

/**
 * Samples `g(t_l)` at the `m_t` time nodes; `len` must equal `m_t` when
 * the configuration is run.
 *
 * # Safety
 * `config` must be a live handle and `samples` must point to `len` doubles.
 */
enum QltStatus qlt_config_set_tabulated(struct QltConfig *config,
                                        const double *samples,
                                        size_t len);

/**
 * Builds and simulates the circuit.
 *
 * # Safety
 * `config` must be a live handle; `out` must be valid for writing one pointer.
 */
enum QltStatus qlt_run(const struct QltConfig *config, struct QltResult **out);

/**
 * # Safety
 * `result` must be NULL or a handle from [`qlt_run`] not yet freed.
 */
void qlt_result_free(struct QltResult *result);

/**
 * Number of nodes (`2^n_sys`), or 0 for NULL.
 *
 * # Safety
 * `result` must be NULL or a live handle.
 */
size_t qlt_result_len(const struct QltResult *result);

/**
 * Rescaled transform values, one complex number per node.
 *
 * # Safety
 * `result` must be a live handle and `out` must have room for
 * `2·capacity` doubles.
 */
enum QltStatus qlt_result_values(const struct QltResult *result, double *out, size_t capacity);

/**
 * Post-selected amplitudes before rescaling.
 *
 * # Safety
 * `result` must be a live handle and `out` must have room for
 * `2·capacity` doubles.
 */
enum QltStatus qlt_result_raw_amplitudes(const struct QltResult *result,
                                         double *out,
                                         size_t capacity);

/**
 * Laplace nodes `s_x`.
 *
 * # Safety
 * `result` must be a live handle and `out` must have room for
 * `2·capacity` doubles.
 */
enum QltStatus qlt_result_nodes(const struct QltResult *result, double *out, size_t capacity);

/**
 * `‖c‖₁ · ‖ĉ‖₁ · √(2^n_sys)`, or NaN for NULL.
 *
 * # Safety
 * `result` must be NULL or a live handle.
 */
double qlt_result_rescale_factor(const struct QltResult *result);

/**
 * Probability of the all-zero ancilla branch, or NaN for NULL.
 *
 * # Safety
 * `result` must be NULL or a live handle.
 */
double qlt_result_success_weight(const struct QltResult *result);

/**
 * Classical discrete double sum at an arbitrary `s`.
 *
 * # Safety
 * `config` must be a live handle; `out_re` and `out_im` must be writable.
 */
enum QltStatus qlt_lchs_sum(const struct QltConfig *config,
                            double s_re,
                            double s_im,
                            double *out_re,
                            double *out_im);

/**
 * Closed-form SELECT gate count for the configured variant.
 *
 * # Safety
 * `config` must be a live handle; `out` must be writable.
 */
enum QltStatus qlt_predicted_gate_count(const struct QltConfig *config, size_t *out);

/**
 * Gate count of the SELECT circuit as constructed.
 *
 * # Safety
 * `config` must be a live handle; `out` must be writable.
 */
enum QltStatus qlt_select_gate_count(const struct QltConfig *config, size_t *out);

/**
 * Largest `|circuit − classical|` over all nodes.
 *
 * # Safety
 * `config` must be a live handle; `max_abs_diff` must be writable.
 */
enum QltStatus qlt_verify(const struct QltConfig *config, double *max_abs_diff);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QLT_H */

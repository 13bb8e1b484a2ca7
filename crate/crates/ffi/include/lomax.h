#ifndef LOMAX_H
#define LOMAX_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum LomaxStatus {
  LOMAX_STATUS_OK = 0,
  LOMAX_STATUS_NULL_POINTER = 1,
  /**
   * Bad parameter values or MCMC settings.
   */
  LOMAX_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Observations outside the support, empty data, index out of range.
   */
  LOMAX_STATUS_DATA_ERROR = 3,
  /**
   * Too few observations for a proper posterior under the chosen prior.
   */
  LOMAX_STATUS_IMPROPER_POSTERIOR = 4,
  /**
   * Every observation is zero.
   */
  LOMAX_STATUS_DEGENERATE_DATA = 5,
  /**
   * Undefined moment or insufficient draws for a statistic.
   */
  LOMAX_STATUS_NUMERICAL = 6,
  /**
   * A Rust panic was caught at the boundary.
   */
  LOMAX_STATUS_PANIC = 7,
} LomaxStatus;

typedef enum LomaxPrior {
  LOMAX_PRIOR_JEFFREYS_DEPENDENT = 0,
  LOMAX_PRIOR_JEFFREYS_INDEPENDENT = 1,
  LOMAX_PRIOR_REFERENCE = 2,
} LomaxPrior;

typedef enum LomaxParameter {
  LOMAX_PARAMETER_BETA = 0,
  LOMAX_PARAMETER_ALPHA = 1,
} LomaxParameter;

/**
 * Opaque dataset handle.
 */
typedef struct LomaxDataset LomaxDataset;

/**
 * Opaque handle to a completed multi-chain fit.
 */
typedef struct LomaxFit LomaxFit;

/**
 * Sampler settings. `init_alpha` / `init_beta` are used when positive;
 * otherwise the chain starts from Gamma(1, 1) draws.
 */
typedef struct LomaxMcmcConfig {
  uint64_t iterations;
  uint64_t burn_in;
  uint64_t thin;
  uint64_t chains;
  double tuning;
  uint64_t seed;
  double init_alpha;
  double init_beta;
} LomaxMcmcConfig;

typedef struct LomaxSummary {
  double mean;
  double sd;
  double ci_low;
  double ci_high;
} LomaxSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *lomax_last_error_message(void);

/**
 * Fills `out` with the defaults for simulation studies
 * (11,000 iterations, 1,000 burn-in, thinning 10, two chains).
 *
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum LomaxStatus lomax_mcmc_config_simulation(struct LomaxMcmcConfig *out);

/**
 * Fills `out` with the defaults for fitting a real dataset
 * (80,000 iterations, 20,000 burn-in, thinning 20, two chains).
 *
 * # Safety
 * `out` must be NULL or valid for writes.
 */
enum LomaxStatus lomax_mcmc_config_application(struct LomaxMcmcConfig *out);

/**
 * Copies `len` observations into a new dataset handle.
 *
 * # Safety
 * `values` must point to `len` readable doubles; `out` must be valid for
 * writes.
 */
enum LomaxStatus lomax_dataset_new(const double *values, size_t len, struct LomaxDataset **out);

/**
 * # Safety
 * `dataset` must be a live handle; `out` must be valid for writes.
 */
enum LomaxStatus lomax_dataset_len(const struct LomaxDataset *dataset, size_t *out);

/**
 * # Safety
 * `dataset` must be NULL or a handle from [`lomax_dataset_new`] not yet freed.
 */
void lomax_dataset_free(struct LomaxDataset *dataset);

/**
 * Log density at `x >= 0`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum LomaxStatus lomax_log_pdf(double beta, double alpha, double x, double *out);

/**
 * Survival function `(1 + x/beta)^(-alpha)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum LomaxStatus lomax_survival(double beta, double alpha, double x, double *out);

/**
 * Hazard `alpha / (beta + x)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum LomaxStatus lomax_hazard(double beta, double alpha, double x, double *out);

/**
 * Median, mean (`α > 1`) and variance (`α > 2`) of Lomax(β, α).
 *
 * # Safety
 * Each out-pointer must be NULL or valid for writes. Undefined moments are
 * written as NaN.
 */
enum LomaxStatus lomax_moments(double beta,
                               double alpha,
                               double *median,
                               double *mean,
                               double *variance);

/**
 * Unnormalised joint log posterior of `(β, α)` given the dataset.
 *
 * # Safety
 * `dataset` must be a live handle; `out` must be valid for writes.
 */
enum LomaxStatus lomax_log_posterior(enum LomaxPrior prior,
                                     double beta,
                                     double alpha,
                                     const struct LomaxDataset *dataset,
                                     double *out);

/**
 * Runs the sampler and returns a fit handle through `out`.
 *
 * # Safety
 * `dataset` and `config` must be valid; `out` must be valid for writes.
 */
enum LomaxStatus lomax_fit(const struct LomaxDataset *dataset,
                           enum LomaxPrior prior,
                           const struct LomaxMcmcConfig *config,
                           struct LomaxFit **out);

/**
 * # Safety
 * `fit` must be NULL or a handle from [`lomax_fit`] not yet freed.
 */
void lomax_fit_free(struct LomaxFit *fit);

/**
 * Posterior summary of one parameter, pooled over chains.
 *
 * # Safety
 * `fit` must be a live handle; `out` must be valid for writes.
 */
enum LomaxStatus lomax_fit_summary(const struct LomaxFit *fit,
                                   enum LomaxParameter parameter,
                                   struct LomaxSummary *out);

/**
 * Gelman-Rubin PSRF of one parameter; needs at least two chains.
 *
 * # Safety
 * `fit` must be a live handle; `out` must be valid for writes.
 */
enum LomaxStatus lomax_fit_psrf(const struct LomaxFit *fit,
                                enum LomaxParameter parameter,
                                double *out);

/**
 * Accepted over proposed α moves across all chains and iterations.
 *
 * # Safety
 * `fit` must be a live handle; `out` must be valid for writes.
 */
enum LomaxStatus lomax_fit_acceptance_rate(const struct LomaxFit *fit, double *out);

/**
 * Number of chains and retained draws per chain.
 *
 * # Safety
 * `fit` must be a live handle; out-pointers must be valid for writes.
 */
enum LomaxStatus lomax_fit_shape(const struct LomaxFit *fit,
                                 size_t *chains,
                                 size_t *draws_per_chain);

/**
 * Copies the retained draws of `parameter` from chain `chain` into `buf`,
 * which must hold at least `draws_per_chain` values.
 *
 * # Safety
 * `fit` must be a live handle; `buf` must be valid for `len` writes.
 */
enum LomaxStatus lomax_fit_copy_draws(const struct LomaxFit *fit,
                                      size_t chain,
                                      enum LomaxParameter parameter,
                                      double *buf,
                                      size_t len);

/**
 * Copies the pooled posterior means of λᵢ (one per observation) into `buf`.
 *
 * # Safety
 * `fit` must be a live handle; `buf` must be valid for `len` writes.
 */
enum LomaxStatus lomax_fit_copy_lambda_means(const struct LomaxFit *fit, double *buf, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOMAX_H */

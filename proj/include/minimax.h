/* C interface to the minimax solver library. All functions return mm_status;
 * on failure mm_last_error() describes the problem (thread-local storage). */
#ifndef MINIMAX_H
#define MINIMAX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  MM_OK = 0,
  MM_ERR_NUMERIC = 1,
  MM_ERR_USAGE = 2,
  MM_ERR_IO = 3
} mm_status;

typedef struct mm_problem mm_problem;
typedef struct mm_trace mm_trace;

/* Message for the most recent failure on this thread; never NULL. */
const char *mm_last_error(void);

/* spec: "family:key=value,..." -- families quadratic, auc, wireless,
 * hardchain, separable. seed applies when the string sets none. */
mm_status mm_problem_create(const char *spec, uint64_t seed, mm_problem **out);
void mm_problem_free(mm_problem *p);

mm_status mm_problem_info(const mm_problem *p, int64_t *n, int64_t *dx, int64_t *dy,
                          double *L, double *mu_x, double *mu_y);

/* Runs a solver and returns a checkpoint trace.
 *   solver:  "eg" | "lsvre" | "alsvre"
 *   params:  "key=value,..." overrides (tau, p, T, epsilon, c, rho, delta_f,
 *            tau_hat); missing keys resolve to the default schedules
 *   mode:    "practical" | "theory" (alsvre only; ignored otherwise)
 *   budgets: budget_sfo > 0 caps oracle calls; budget_iters > 0 sets the
 *            iteration count; at least one must be positive
 *   metrics: comma-separated subset of
 *            dist_sq | grad_norm | grad_mapping | duality_gap | value */
mm_status mm_run(const mm_problem *p, const char *solver, const char *params,
                 const char *mode, int64_t budget_sfo, int64_t budget_iters,
                 int64_t trace_every, uint64_t seed, const char *metrics,
                 mm_trace **out);

size_t mm_trace_rows(const mm_trace *t);
size_t mm_trace_num_metrics(const mm_trace *t);
const char *mm_trace_metric_name(const mm_trace *t, size_t j);
int64_t mm_trace_iteration(const mm_trace *t, size_t row);
int64_t mm_trace_sfo(const mm_trace *t, size_t row);
mm_status mm_trace_metric(const mm_trace *t, size_t row, size_t j, double *out);
int64_t mm_trace_total_sfo(const mm_trace *t);
int64_t mm_trace_measurement_sfo(const mm_trace *t);
mm_status mm_trace_write_csv(const mm_trace *t, const char *path);
void mm_trace_free(mm_trace *t);

/* Runs a named invariant suite ("projections", "smoothness", "saddles",
 * "zero_chain", "lemmas", "all"). Writes a per-check report into report_buf
 * (truncated to buf_len) and the number of failed checks into num_failed. */
mm_status mm_verify(const char *suite, int *num_failed, char *report_buf,
                    size_t buf_len);

/* Writes a synthetic channel-noise vector (uniform [lo, hi], one value per
 * line, '#' parameter header) for the wireless problem family. */
mm_status mm_gen_wireless(int64_t n, double lo, double hi, uint64_t seed,
                          const char *path);

#ifdef __cplusplus
}
#endif

#endif /* MINIMAX_H */

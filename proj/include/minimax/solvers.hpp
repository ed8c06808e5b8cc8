#ifndef MINIMAX_SOLVERS_HPP
#define MINIMAX_SOLVERS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minimax/metrics.hpp"
#include "minimax/problem.hpp"

namespace minimax {

// Loopless variance-reduced extragradient parameters. The averaging weight
// alpha = 1 - p is always derived, never stored.
struct LsvreParams {
  double tau = 0.0;   // step size
  double p = 0.0;     // snapshot refresh probability in (0, 1]
  long long T = 0;    // iteration count
  std::uint64_t seed = 0;

  void validate() const;
};

// tau = 1/(4 sqrt(n) L), p = 1/(2n); T left for the caller.
LsvreParams lsvre_default_params(const Problem &p);

struct Checkpoint {
  long long iteration = 0;
  long long sfo = 0;  // cumulative solver SFO calls at this point
  std::vector<double> values;
};

struct SolverTrace {
  std::vector<std::string> metric_names;
  std::vector<Checkpoint> checkpoints;
  std::vector<std::pair<std::string, double>> params;
  std::uint64_t seed = 0;
  PrimalDualPoint final_point;
  long long iterations = 0;
  long long total_sfo = 0;
  long long measurement_sfo = 0;
  long long snapshot_refreshes = 0;
};

// Classical deterministic extragradient; 2n SFO per iteration. max_sfo = 0
// means unlimited; otherwise the run stops once the budget cannot cover the
// next iteration.
SolverTrace extragradient_run(const ProblemPtr &problem, const PrimalDualPoint &z0,
                              double tau, long long T, long long trace_every,
                              const MetricSet *metrics = nullptr, long long max_sfo = 0);

// Loopless variance-reduced extragradient. Expected SFO per iteration is
// p*n + 2 on top of the initial n-call snapshot.
SolverTrace lsvre_run(const ProblemPtr &problem, const PrimalDualPoint &z0,
                      const LsvreParams &params, long long trace_every,
                      const MetricSet *metrics = nullptr, long long max_sfo = 0);

enum class ScheduleMode { Theory, Practical };

// Accelerated outer-loop schedule. tau_k / T_k hold one entry per round.
struct ScheduleParams {
  double beta = 0.0;
  double q = 1.0;
  double gamma = 0.0;  // momentum (1 - sqrt(q)) / (1 + sqrt(q))
  double rho = 0.0;
  double p = 0.0;
  std::vector<double> tau_k;
  std::vector<long long> T_k;
  long long K = 0;
  ScheduleMode mode = ScheduleMode::Practical;
  std::uint64_t seed = 0;
  double delta_f = 0.0;  // initial-gap bound used by theory mode

  void validate() const;
};

struct ScheduleOptions {
  double practical_c = 0.5;  // practical-mode inner length T_k = ceil(c*n)
  double tau = 0.0;          // > 0 overrides the derived inner step size
  double beta = -1.0;        // >= 0 overrides the three-case rule
  long long budget_sfo = 0;  // practical mode derives K from this when > 0
  double delta_f = 0.0;      // theory mode: caller-supplied bound (0 = auto)
  double rho = 0.0;          // 0 = default 0.5*sqrt(q)
  double p = 0.0;            // 0 = default 1/(2n)
  long long K_override = 0;  // > 0 forces the outer round count
  std::uint64_t seed = 0;
};

// Per-round accuracy sequences used by the convergence analysis; exposed so
// tests can check monotonicity and positivity.
struct TheorySchedule {
  double delta_f = 0.0;
  double rho = 0.0;
  double q = 0.0;
  double mu_y = 0.0;
  double L_plus_beta = 0.0;
  double n = 0.0;

  double epsilon_k(long long k) const;
  double delta_k(long long k) const;
};

TheorySchedule make_theory_schedule(const Problem &p, double beta, double rho, double q,
                                    double delta_f);

// Derives beta (three-case rule), q, gamma, rho, p, tau_k, T_k and K.
// Requires 0 < mu_x <= mu_y; transpose the problem first otherwise.
ScheduleParams alsvre_default_params(const Problem &p, double epsilon, ScheduleMode mode,
                                     const ScheduleOptions &opt = {});

// Catalyst-style outer loop: each round solves the beta-shifted sub-problem
// with a warm-started inner lsvre_run, applies a projected full-gradient
// correction, then momentum extrapolation on x.
SolverTrace alsvre_run(const ProblemPtr &problem, const PrimalDualPoint &z0,
                       const ScheduleParams &params, long long trace_every,
                       const MetricSet *metrics = nullptr, long long max_sfo = 0);

// Convenience front end: transposes the problem when mu_x > mu_y so the
// schedule preconditions hold, runs, and maps the answer back.
SolverTrace alsvre_solve(const ProblemPtr &problem, const PrimalDualPoint &z0,
                         double epsilon, ScheduleMode mode, const ScheduleOptions &opt,
                         long long trace_every, const MetricSet *metrics = nullptr,
                         long long max_sfo = 0);

}  // namespace minimax

#endif

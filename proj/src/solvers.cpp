#include "minimax/solvers.hpp"

#include <cmath>

#include "minimax/regularized.hpp"
#include "minimax/rng.hpp"

namespace minimax {

namespace {

void record(SolverTrace &trace, const MetricSet *metrics, long long iteration,
            long long sfo, const PrimalDualPoint &z) {
  Checkpoint c;
  c.iteration = iteration;
  c.sfo = sfo;
  if (metrics) c.values = metrics->evaluate(z);
  trace.checkpoints.push_back(std::move(c));
}

void check_finite(const PrimalDualPoint &z) {
  if (!z.all_finite()) throw NumericError("iterate diverged to NaN/Inf");
}

}  // namespace

void LsvreParams::validate() const {
  if (!(tau > 0.0)) throw UsageError("lsvre: tau must be positive");
  if (!(p > 0.0) || p > 1.0) throw UsageError("lsvre: p must be in (0, 1]");
  if (T < 0) throw UsageError("lsvre: T must be >= 0");
}

LsvreParams lsvre_default_params(const Problem &prob) {
  const auto &c = prob.constants();
  LsvreParams params;
  params.p = 1.0 / (2.0 * static_cast<double>(c.n));
  params.tau = 1.0 / (4.0 * std::sqrt(static_cast<double>(c.n)) * c.L);
  return params;
}

SolverTrace extragradient_run(const ProblemPtr &problem, const PrimalDualPoint &z0,
                              double tau, long long T, long long trace_every,
                              const MetricSet *metrics, long long max_sfo) {
  if (!(tau > 0.0)) throw UsageError("extragradient: tau must be positive");
  if (T < 0) throw UsageError("extragradient: T must be >= 0");
  const Problem &P = *problem;
  const Eigen::Index n = P.num_components();
  Oracle oracle(P);

  SolverTrace trace;
  if (metrics) trace.metric_names = metrics->names();
  trace.params = {{"tau", tau}, {"T", static_cast<double>(T)}};

  PrimalDualPoint z = P.sets().project(z0);
  record(trace, metrics, 0, 0, z);

  GradientPair g(P.dx(), P.dy());
  for (long long k = 0; k < T; ++k) {
    if (max_sfo > 0 && oracle.sfo_calls() + 2 * n > max_sfo) break;
    oracle.full_gradient(z, g);
    const PrimalDualPoint z_half = P.sets().project(
        {z.x - tau * g.gx, z.y - tau * g.gy_negated});
    oracle.full_gradient(z_half, g);
    z = P.sets().project({z.x - tau * g.gx, z.y - tau * g.gy_negated});
    check_finite(z);
    ++trace.iterations;
    if (trace_every > 0 && (k + 1) % trace_every == 0)
      record(trace, metrics, k + 1, oracle.sfo_calls(), z);
  }
  if (trace.checkpoints.empty() || trace.checkpoints.back().iteration != trace.iterations)
    record(trace, metrics, trace.iterations, oracle.sfo_calls(), z);
  trace.final_point = z;
  trace.total_sfo = oracle.sfo_calls();
  if (metrics) trace.measurement_sfo = metrics->measurement_sfo();
  return trace;
}

SolverTrace lsvre_run(const ProblemPtr &problem, const PrimalDualPoint &z0,
                      const LsvreParams &params, long long trace_every,
                      const MetricSet *metrics, long long max_sfo) {
  params.validate();
  const Problem &P = *problem;
  const Eigen::Index n = P.num_components();
  const double alpha = 1.0 - params.p;
  Oracle oracle(P);
  Rng rng(params.seed);

  SolverTrace trace;
  trace.seed = params.seed;
  if (metrics) trace.metric_names = metrics->names();
  trace.params = {{"tau", params.tau},
                  {"p", params.p},
                  {"T", static_cast<double>(params.T)}};

  PrimalDualPoint z = P.sets().project(z0);
  PrimalDualPoint w = z;
  record(trace, metrics, 0, 0, z);

  GradientPair gw(P.dx(), P.dy());
  oracle.full_gradient(w, gw);  // initial snapshot
  GradientPair gi_half(P.dx(), P.dy()), gi_w(P.dx(), P.dy());

  for (long long k = 0; k < params.T; ++k) {
    if (max_sfo > 0 && oracle.sfo_calls() + 2 > max_sfo) break;
    const PrimalDualPoint z_bar = z * alpha + w * (1.0 - alpha);
    const PrimalDualPoint z_half = P.sets().project(
        {z_bar.x - params.tau * gw.gx, z_bar.y - params.tau * gw.gy_negated});
    const auto i = static_cast<Eigen::Index>(rng.uniform_index(
        static_cast<std::uint64_t>(n)));
    oracle.component_gradient(i, z_half, gi_half);
    oracle.component_gradient(i, w, gi_w);
    z = P.sets().project(
        {z_bar.x - params.tau * (gw.gx + gi_half.gx - gi_w.gx),
         z_bar.y - params.tau * (gw.gy_negated + gi_half.gy_negated - gi_w.gy_negated)});
    check_finite(z);
    if (rng.uniform() < params.p) {
      w = z;
      oracle.full_gradient(w, gw);
      ++trace.snapshot_refreshes;
    }
    ++trace.iterations;
    if (trace_every > 0 && (k + 1) % trace_every == 0)
      record(trace, metrics, k + 1, oracle.sfo_calls(), z);
  }
  if (trace.checkpoints.empty() || trace.checkpoints.back().iteration != trace.iterations)
    record(trace, metrics, trace.iterations, oracle.sfo_calls(), z);
  trace.final_point = z;
  trace.total_sfo = oracle.sfo_calls();
  if (metrics) trace.measurement_sfo = metrics->measurement_sfo();
  return trace;
}

void ScheduleParams::validate() const {
  if (K < 1) throw UsageError("schedule: K must be >= 1");
  if (beta < 0.0) throw UsageError("schedule: beta must be >= 0");
  if (!(q > 0.0) || q > 1.0) throw UsageError("schedule: q must be in (0, 1]");
  if (!(rho > 0.0) || !(rho < std::sqrt(q)))
    throw UsageError("schedule: rho must lie in (0, sqrt(q))");
  if (!(p > 0.0) || p > 1.0) throw UsageError("schedule: p must be in (0, 1]");
  if (tau_k.size() != static_cast<std::size_t>(K) ||
      T_k.size() != static_cast<std::size_t>(K))
    throw UsageError("schedule: need one tau_k and T_k per round");
  const double g = (1.0 - std::sqrt(q)) / (1.0 + std::sqrt(q));
  if (std::abs(gamma - g) > 1e-12)
    throw UsageError("schedule: gamma must equal (1-sqrt(q))/(1+sqrt(q))");
}

double TheorySchedule::epsilon_k(long long k) const {
  return 2.0 * mu_y * delta_f * std::pow(1.0 - rho, static_cast<double>(k)) /
         (3.0 * L_plus_beta * (7.0 * L_plus_beta + 2.0 * std::sqrt(n) * mu_y));
}

double TheorySchedule::delta_k(long long k) const {
  const double r = std::sqrt(q) - rho;
  return 8.0 * delta_f * std::pow(1.0 - rho, static_cast<double>(k + 1)) / (r * r);
}

TheorySchedule make_theory_schedule(const Problem &p, double beta, double rho, double q,
                                    double delta_f) {
  TheorySchedule s;
  s.delta_f = delta_f;
  s.rho = rho;
  s.q = q;
  s.mu_y = p.constants().mu_y;
  s.L_plus_beta = p.constants().L + beta;
  s.n = static_cast<double>(p.constants().n);
  return s;
}

namespace {

// Fallback initial-gap bound: a smoothness estimate of the objective range
// over bounded sets, or a fixed heuristic when a set is unbounded.
double default_delta_f(const Problem &p) {
  const double Dx = p.sets().x_set.diameter(p.dx());
  const double Dy = p.sets().y_set.diameter(p.dy());
  if (!std::isfinite(Dx) || !std::isfinite(Dy)) return 10.0;
  const PrimalDualPoint z_ref =
      p.sets().project(PrimalDualPoint::Zero(p.dx(), p.dy()));
  const double gnorm = gradient_operator(p, z_ref).norm();
  const double D = Dx + Dy;
  return gnorm * D + 0.5 * p.constants().L * D * D;
}

}  // namespace

ScheduleParams alsvre_default_params(const Problem &prob, double epsilon,
                                     ScheduleMode mode, const ScheduleOptions &opt) {
  const auto &c = prob.constants();
  if (!(c.mu_x > 0.0) || !(c.mu_y > 0.0))
    throw UsageError(
        "schedule: needs strongly-convex-strongly-concave constants; lift the "
        "problem with wrap_strongly_concave/wrap_both first");
  if (c.mu_x > c.mu_y)
    throw UsageError("schedule: requires mu_x <= mu_y; transpose the problem first");
  if (!(epsilon > 0.0)) throw UsageError("schedule: epsilon must be positive");

  const double n = static_cast<double>(c.n);
  const double sqn = std::sqrt(n);
  const double kx = c.kappa_x();
  const double ky = c.kappa_y();

  ScheduleParams s;
  s.mode = mode;
  s.seed = opt.seed;
  if (ky >= sqn) {
    s.beta = c.mu_y - c.mu_x;
  } else if (kx > sqn) {
    s.beta = c.L / sqn - c.mu_x;
  } else {
    s.beta = 0.0;
  }
  if (opt.beta >= 0.0) s.beta = opt.beta;
  s.q = c.mu_x / (c.mu_x + s.beta);
  const double sq = std::sqrt(s.q);
  s.gamma = (1.0 - sq) / (1.0 + sq);
  s.rho = opt.rho > 0.0 ? opt.rho : 0.5 * sq;
  s.p = opt.p > 0.0 ? opt.p : 1.0 / (2.0 * n);
  const double tau =
      opt.tau > 0.0 ? opt.tau : 1.0 / (4.0 * sqn * (c.L + s.beta));

  if (mode == ScheduleMode::Theory) {
    s.delta_f = opt.delta_f > 0.0 ? opt.delta_f : default_delta_f(prob);
    const double Lb = c.L + s.beta;
    const double mu_min = std::min(c.mu_x, c.mu_y);
    const double r = sq - s.rho;
    const double log_arg =
        12.0 * (2.0 / (1.0 - s.rho) +
                1728.0 * s.beta * Lb * (7.0 * Lb + 2.0 * sqn * c.mu_y) /
                    (c.mu_x * c.mu_y * mu_min * (1.0 - s.rho) * (1.0 - s.rho) * r * r));
    const auto T = static_cast<long long>(std::ceil(
        4.0 * (n + 2.0 * sqn * Lb / std::min(c.mu_x + s.beta, c.mu_y)) *
        std::log(log_arg)));
    // the displayed round count omits the accuracy target from the log; we
    // divide by epsilon so the schedule actually depends on it
    s.K = static_cast<long long>(std::ceil(
        (2.0 / sq) * std::log(10992.0 * sqn * s.delta_f * ky * kx * kx * kx / epsilon)));
    s.K = std::max<long long>(s.K, 1);
    s.tau_k.assign(static_cast<std::size_t>(s.K), tau);
    s.T_k.assign(static_cast<std::size_t>(s.K), T);
  } else {
    const auto T = static_cast<long long>(
        std::ceil(opt.practical_c * n));
    const long long T_eff = std::max<long long>(T, 1);
    if (opt.budget_sfo > 0) {
      // expected SFO per round: inner snapshot + T(p*n + 2) + correction
      const double round_cost = n + static_cast<double>(T_eff) * (s.p * n + 2.0) + n;
      s.K = std::max<long long>(
          1, static_cast<long long>(std::floor(static_cast<double>(opt.budget_sfo) /
                                               round_cost)));
    } else {
      s.K = std::max<long long>(
          1, static_cast<long long>(std::ceil((2.0 / sq) * std::log(1.0 / epsilon))));
    }
    s.tau_k.assign(static_cast<std::size_t>(s.K), tau);
    s.T_k.assign(static_cast<std::size_t>(s.K), T_eff);
  }
  if (opt.K_override > 0) {
    s.K = opt.K_override;
    s.tau_k.assign(static_cast<std::size_t>(s.K), tau);
    s.T_k.assign(static_cast<std::size_t>(s.K), s.T_k.empty() ? 1 : s.T_k.front());
  }
  return s;
}

SolverTrace alsvre_run(const ProblemPtr &problem, const PrimalDualPoint &z0,
                       const ScheduleParams &params, long long trace_every,
                       const MetricSet *metrics, long long max_sfo) {
  params.validate();
  const Problem &P = *problem;
  if (!(P.constants().mu_x + params.beta > 0.0))
    throw UsageError("alsvre: sub-problems need mu_x + beta > 0");
  const Eigen::Index n = P.num_components();

  SolverTrace trace;
  trace.seed = params.seed;
  if (metrics) trace.metric_names = metrics->names();
  trace.params = {{"beta", params.beta}, {"q", params.q},    {"gamma", params.gamma},
                  {"rho", params.rho},   {"p", params.p},    {"K", static_cast<double>(params.K)}};

  PrimalDualPoint z = P.sets().project(z0);
  record(trace, metrics, 0, 0, z);
  Vector x_prev = z.x;
  Vector y_prev = z.y;
  Vector u = z.x;

  GradientPair gF(P.dx(), P.dy());
  for (long long k = 1; k <= params.K; ++k) {
    if (max_sfo > 0 && trace.total_sfo + 2 * n > max_sfo) break;
    auto Fk = proximal_shift(problem, params.beta, u);
    LsvreParams inner;
    inner.tau = params.tau_k[static_cast<std::size_t>(k - 1)];
    inner.p = params.p;
    inner.T = params.T_k[static_cast<std::size_t>(k - 1)];
    inner.seed = Rng::derive(params.seed, static_cast<std::uint64_t>(k));
    const long long inner_budget =
        max_sfo > 0 ? max_sfo - trace.total_sfo - n : 0;  // reserve the correction
    SolverTrace sub = lsvre_run(Fk, {x_prev, y_prev}, inner, trace_every, metrics,
                                inner_budget);
    for (const auto &cp : sub.checkpoints) {
      if (cp.iteration == 0) continue;  // warm-start point, already recorded
      Checkpoint shifted = cp;
      shifted.iteration += trace.iterations;
      shifted.sfo += trace.total_sfo;
      trace.checkpoints.push_back(std::move(shifted));
    }
    trace.iterations += sub.iterations;
    trace.total_sfo += sub.total_sfo;
    trace.snapshot_refreshes += sub.snapshot_refreshes;

    // projected full-gradient correction on the sub-problem (n SFO)
    Oracle oracle(*Fk);
    oracle.full_gradient(sub.final_point, gF);
    const double tau = inner.tau;
    z.x = P.sets().x_set.project(sub.final_point.x - tau * gF.gx);
    z.y = P.sets().y_set.project(sub.final_point.y - tau * gF.gy_negated);
    check_finite(z);
    trace.total_sfo += oracle.sfo_calls();

    u = z.x + params.gamma * (z.x - x_prev);
    x_prev = z.x;
    y_prev = z.y;
    ++trace.iterations;
    record(trace, metrics, trace.iterations, trace.total_sfo, z);
  }
  trace.final_point = z;
  if (metrics) trace.measurement_sfo = metrics->measurement_sfo();
  return trace;
}

SolverTrace alsvre_solve(const ProblemPtr &problem, const PrimalDualPoint &z0,
                         double epsilon, ScheduleMode mode, const ScheduleOptions &opt,
                         long long trace_every, const MetricSet *metrics,
                         long long max_sfo) {
  const auto &c = problem->constants();
  if (c.mu_x <= c.mu_y) {
    const ScheduleParams params = alsvre_default_params(*problem, epsilon, mode, opt);
    return alsvre_run(problem, z0, params, trace_every, metrics, max_sfo);
  }
  auto flipped = std::make_shared<TransposedProblem>(problem);
  const ScheduleParams params = alsvre_default_params(*flipped, epsilon, mode, opt);
  MetricSet swapped;
  if (metrics) swapped = metrics->transposed();
  SolverTrace trace =
      alsvre_run(flipped, TransposedProblem::swap(z0), params, trace_every,
                 metrics ? &swapped : nullptr, max_sfo);
  trace.final_point = TransposedProblem::swap(trace.final_point);
  return trace;
}

}  // namespace minimax

#include "minimax.h"

#include <cstring>
#include <sstream>

#include "minimax/data_io.hpp"
#include "minimax/metrics.hpp"
#include "minimax/quadratic.hpp"
#include "minimax/regularized.hpp"
#include "minimax/rng.hpp"
#include "minimax/solvers.hpp"
#include "minimax/spec_parse.hpp"
#include "minimax/verify.hpp"

using namespace minimax;

struct mm_problem {
  ProblemPtr problem;
  std::string family;
};

struct mm_trace {
  SolverTrace trace;
  Eigen::Index n = 1;
};

namespace {

thread_local std::string g_error = "ok";

template <typename Fn>
mm_status guarded(Fn &&fn) {
  try {
    fn();
    return MM_OK;
  } catch (const UsageError &e) {
    g_error = e.what();
    return MM_ERR_USAGE;
  } catch (const IoError &e) {
    g_error = e.what();
    return MM_ERR_IO;
  } catch (const NumericError &e) {
    g_error = e.what();
    return MM_ERR_NUMERIC;
  } catch (const std::exception &e) {
    g_error = e.what();
    return MM_ERR_NUMERIC;
  }
}

ParsedSpec parse_params(const char *params) {
  std::string text = "params:";
  if (params) text += params;
  return parse_spec(text);
}

PrimalDualPoint default_start(const mm_problem &p) {
  if (p.family == "hardchain" || p.family == "separable")
    return PrimalDualPoint::Zero(p.problem->dx(), p.problem->dy());
  return p.problem->sets().project(
      PrimalDualPoint::Ones(p.problem->dx(), p.problem->dy()));
}

MetricSet build_metrics(const mm_problem &p, const std::string &list, double tau_hat) {
  MetricSet set;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    if (name == "dist_sq") {
      if (!p.problem->has_known_saddle())
        throw UsageError("metric dist_sq needs a problem with a known saddle");
      set.merge(MetricSet::dist_to_saddle(p.problem->known_saddle()));
    } else if (name == "grad_norm") {
      set.merge(MetricSet::grad_norm(p.problem));
    } else if (name == "grad_mapping") {
      set.merge(MetricSet::grad_mapping(p.problem, tau_hat));
    } else if (name == "duality_gap") {
      auto q = std::dynamic_pointer_cast<const QuadraticProblem>(p.problem);
      if (!q) throw UsageError("metric duality_gap needs a quadratic problem");
      set.merge(MetricSet::gap_quadratic(q));
    } else if (name == "value") {
      ProblemPtr prob = p.problem;
      MetricSet m;
      m.add("value", prob->num_components(),
            [prob](const PrimalDualPoint &z) { return prob->value(z); });
      set.merge(std::move(m));
    } else {
      throw UsageError("unknown metric '" + name + "'");
    }
  }
  return set;
}

}  // namespace

extern "C" {

const char *mm_last_error(void) { return g_error.c_str(); }

mm_status mm_problem_create(const char *spec, uint64_t seed, mm_problem **out) {
  return guarded([&] {
    if (!spec || !out) throw UsageError("mm_problem_create: null argument");
    auto *p = new mm_problem;
    try {
      p->problem = make_problem(spec, seed);
      p->family = parse_spec(spec).family;
    } catch (...) {
      delete p;
      throw;
    }
    *out = p;
  });
}

void mm_problem_free(mm_problem *p) { delete p; }

mm_status mm_problem_info(const mm_problem *p, int64_t *n, int64_t *dx, int64_t *dy,
                          double *L, double *mu_x, double *mu_y) {
  return guarded([&] {
    if (!p) throw UsageError("mm_problem_info: null problem");
    const auto &c = p->problem->constants();
    if (n) *n = c.n;
    if (dx) *dx = p->problem->dx();
    if (dy) *dy = p->problem->dy();
    if (L) *L = c.L;
    if (mu_x) *mu_x = c.mu_x;
    if (mu_y) *mu_y = c.mu_y;
  });
}

mm_status mm_run(const mm_problem *p, const char *solver, const char *params,
                 const char *mode, int64_t budget_sfo, int64_t budget_iters,
                 int64_t trace_every, uint64_t seed, const char *metrics,
                 mm_trace **out) {
  return guarded([&] {
    if (!p || !solver || !out) throw UsageError("mm_run: null argument");
    if (budget_sfo <= 0 && budget_iters <= 0)
      throw UsageError("mm_run: need a positive SFO or iteration budget");
    if (budget_sfo > 0 && budget_iters > 0)
      throw UsageError("mm_run: budgets are mutually exclusive");
    const ParsedSpec kv = parse_params(params);
    const std::string solver_name = solver;
    const Eigen::Index n = p->problem->num_components();
    const double nn = static_cast<double>(n);

    MetricSet metric_set = build_metrics(*p, metrics ? metrics : "",
                                         kv.get_double("tau_hat", 0.1));
    const MetricSet *ms = metric_set.size() > 0 ? &metric_set : nullptr;
    const PrimalDualPoint z0 = default_start(*p);
    const long long max_sfo = budget_sfo > 0 ? budget_sfo : 0;

    SolverTrace trace;
    if (solver_name == "eg") {
      const double tau = kv.get_double("tau", 1.0 / (4.0 * p->problem->constants().L));
      long long T = budget_iters;
      if (T <= 0)
        T = static_cast<long long>(static_cast<double>(budget_sfo) / (2.0 * nn));
      trace = extragradient_run(p->problem, z0, tau, T, trace_every, ms, max_sfo);
    } else if (solver_name == "lsvre") {
      LsvreParams lp = lsvre_default_params(*p->problem);
      lp.tau = kv.get_double("tau", lp.tau);
      lp.p = kv.get_double("p", lp.p);
      lp.seed = seed;
      lp.T = kv.get_int("T", 0);
      if (lp.T <= 0) {
        if (budget_iters > 0) {
          lp.T = budget_iters;
        } else {
          // expected cost: n snapshot + (p n + 2) per iteration
          lp.T = static_cast<long long>(
              std::ceil((static_cast<double>(budget_sfo) - nn) / (lp.p * nn + 2.0)));
          lp.T = std::max<long long>(lp.T, 0);
        }
      }
      trace = lsvre_run(p->problem, z0, lp, trace_every, ms, max_sfo);
    } else if (solver_name == "alsvre") {
      // lift problems without strongly-convex-strongly-concave structure by
      // anchored quadratic regularization before scheduling
      ProblemPtr prob = p->problem;
      const auto &c = prob->constants();
      if (!(c.mu_x > 0.0) || !(c.mu_y > 0.0)) {
        const double wrap_eps = kv.get_double("wrap_eps", kv.get_double("epsilon", 1e-6));
        const double Dx = prob->sets().x_set.diameter(prob->dx());
        const double Dy = prob->sets().y_set.diameter(prob->dy());
        if (!std::isfinite(Dx) || !std::isfinite(Dy))
          throw UsageError(
              "alsvre on a non-strongly-convex-concave problem needs bounded "
              "feasible sets for the regularization lift");
        if (!(c.mu_x > 0.0) && c.mu_y > 0.0)
          prob = wrap_strongly_concave(prob, wrap_eps, Dx, z0.x);
        else
          prob = wrap_both(prob, wrap_eps, Dx, Dy, z0.x, z0.y);
      }
      ScheduleOptions opt;
      opt.seed = seed;
      opt.practical_c = kv.get_double("c", opt.practical_c);
      opt.tau = kv.get_double("tau", 0.0);
      opt.beta = kv.get_double("beta", -1.0);
      opt.rho = kv.get_double("rho", 0.0);
      opt.p = kv.get_double("p", 0.0);
      opt.delta_f = kv.get_double("delta_f", 0.0);
      opt.budget_sfo = max_sfo;
      // with an iteration budget, rounds are capped instead of SFO calls
      opt.K_override = budget_iters > 0 ? budget_iters : kv.get_int("K", 0);
      const double epsilon = kv.get_double("epsilon", 1e-6);
      const std::string mode_name = mode && *mode ? mode : "practical";
      ScheduleMode m;
      if (mode_name == "practical")
        m = ScheduleMode::Practical;
      else if (mode_name == "theory")
        m = ScheduleMode::Theory;
      else
        throw UsageError("mm_run: mode must be 'practical' or 'theory'");
      trace = alsvre_solve(prob, z0, epsilon, m, opt, trace_every, ms, max_sfo);
    } else {
      throw UsageError("mm_run: unknown solver '" + solver_name + "'");
    }

    auto *t = new mm_trace;
    t->trace = std::move(trace);
    t->n = n;
    *out = t;
  });
}

size_t mm_trace_rows(const mm_trace *t) { return t ? t->trace.checkpoints.size() : 0; }

size_t mm_trace_num_metrics(const mm_trace *t) {
  return t ? t->trace.metric_names.size() : 0;
}

const char *mm_trace_metric_name(const mm_trace *t, size_t j) {
  if (!t || j >= t->trace.metric_names.size()) return nullptr;
  return t->trace.metric_names[j].c_str();
}

int64_t mm_trace_iteration(const mm_trace *t, size_t row) {
  if (!t || row >= t->trace.checkpoints.size()) return -1;
  return t->trace.checkpoints[row].iteration;
}

int64_t mm_trace_sfo(const mm_trace *t, size_t row) {
  if (!t || row >= t->trace.checkpoints.size()) return -1;
  return t->trace.checkpoints[row].sfo;
}

mm_status mm_trace_metric(const mm_trace *t, size_t row, size_t j, double *out) {
  return guarded([&] {
    if (!t || !out) throw UsageError("mm_trace_metric: null argument");
    if (row >= t->trace.checkpoints.size())
      throw UsageError("mm_trace_metric: row out of range");
    const auto &values = t->trace.checkpoints[row].values;
    if (j >= values.size()) throw UsageError("mm_trace_metric: column out of range");
    *out = values[j];
  });
}

int64_t mm_trace_total_sfo(const mm_trace *t) { return t ? t->trace.total_sfo : -1; }

int64_t mm_trace_measurement_sfo(const mm_trace *t) {
  return t ? t->trace.measurement_sfo : -1;
}

mm_status mm_trace_write_csv(const mm_trace *t, const char *path) {
  return guarded([&] {
    if (!t || !path) throw UsageError("mm_trace_write_csv: null argument");
    write_trace_csv_file(t->trace, t->n, path);
  });
}

void mm_trace_free(mm_trace *t) { delete t; }

mm_status mm_verify(const char *suite, int *num_failed, char *report_buf,
                    size_t buf_len) {
  return guarded([&] {
    if (!suite) throw UsageError("mm_verify: null suite");
    const VerifyReport report = run_verify_suite(suite);
    int failed = 0;
    std::string text;
    for (const auto &c : report.checks) {
      if (!c.pass) ++failed;
      text += c.name;
      text += c.pass ? ": PASS" : ": FAIL";
      if (!c.detail.empty()) text += " (" + c.detail + ")";
      text += "\n";
    }
    if (num_failed) *num_failed = failed;
    if (report_buf && buf_len > 0) {
      const size_t len = std::min(buf_len - 1, text.size());
      std::memcpy(report_buf, text.data(), len);
      report_buf[len] = '\0';
    }
  });
}

mm_status mm_gen_wireless(int64_t n, double lo, double hi, uint64_t seed,
                          const char *path) {
  return guarded([&] {
    if (!path) throw UsageError("mm_gen_wireless: null path");
    if (n < 1) throw UsageError("mm_gen_wireless: n must be >= 1");
    if (!(hi >= lo) || lo < 0.0)
      throw UsageError("mm_gen_wireless: need 0 <= lo <= hi");
    Rng rng(seed);
    Vector a(n);
    for (int64_t i = 0; i < n; ++i) a[static_cast<Eigen::Index>(i)] = rng.uniform(lo, hi);
    std::ostringstream header;
    header << "wireless n=" << n << " lo=" << format_real(lo)
           << " hi=" << format_real(hi) << " seed=" << seed;
    write_vector_file(a, header.str(), std::string(path));
  });
}

}  // extern "C"

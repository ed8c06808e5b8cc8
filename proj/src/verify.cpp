#include "minimax/verify.hpp"

#include <cmath>

#include "minimax/lowerbound.hpp"
#include "minimax/metrics.hpp"
#include "minimax/quadratic.hpp"
#include "minimax/regularized.hpp"
#include "minimax/rng.hpp"
#include "minimax/solvers.hpp"

namespace minimax {

namespace {

Vector random_vector(Eigen::Index d, double scale, Rng &rng) {
  Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v[i] = scale * rng.normal();
  return v;
}

void add(VerifyReport &report, const std::string &name, bool pass,
         const std::string &detail = "") {
  report.checks.push_back({name, pass, detail});
}

void verify_projections(VerifyReport &report) {
  Rng rng(101);
  const Eigen::Index d = 6;
  const std::vector<FeasibleSet> sets = {
      FeasibleSet::ball(1.5), FeasibleSet::nonneg_ball(2.0), FeasibleSet::simplex_sum(3.0),
      FeasibleSet::box(-Vector::Ones(d), 2.0 * Vector::Ones(d))};
  const std::vector<std::string> names = {"ball", "nonneg_ball", "simplex", "box"};
  for (std::size_t s = 0; s < sets.size(); ++s) {
    bool nonexpansive = true, vi = true, idempotent = true, member = true;
    for (int t = 0; t < 500; ++t) {
      const Vector u = random_vector(d, 3.0, rng);
      const Vector v = random_vector(d, 3.0, rng);
      const Vector pu = sets[s].project(u);
      const Vector pv = sets[s].project(v);
      if ((pu - pv).norm() > (u - v).norm() + 1e-9) nonexpansive = false;
      // obtuse-angle characterization of the projection
      if ((pu - u).dot(pu - pv) > 1e-9) vi = false;
      if ((sets[s].project(pu) - pu).norm() > 1e-12) idempotent = false;
      if (!sets[s].contains(pu, 1e-9)) member = false;
    }
    add(report, names[s] + " nonexpansive", nonexpansive);
    add(report, names[s] + " variational inequality", vi);
    add(report, names[s] + " idempotent", idempotent);
    add(report, names[s] + " feasible output", member);
  }
}

// n components, each owning one coordinate of z with weight sqrt(n)*L: the
// average-smoothness constant is exactly L.
class AxisQuadratic : public Problem {
 public:
  AxisQuadratic(Eigen::Index n, double L)
      : Problem(n / 2, n - n / 2,
                [&] {
                  ProblemConstants c;
                  c.n = n;
                  c.L = L;
                  return c;
                }(),
                PrimalDualSet{FeasibleSet::whole_space(), FeasibleSet::whole_space()}),
        w_(std::sqrt(static_cast<double>(n)) * L) {}

  double component_value(Eigen::Index i, const PrimalDualPoint &z) const override {
    const double v = coord(i, z);
    return 0.5 * w_ * v * v * sign(i);
  }
  double value(const PrimalDualPoint &z) const override {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < constants_.n; ++i) acc += component_value(i, z);
    return acc / static_cast<double>(constants_.n);
  }
  void component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                          GradientPair &out) const override {
    out.gx.setZero();
    out.gy_negated.setZero();
    if (i < dx_)
      out.gx[i] = w_ * z.x[i];
    else
      out.gy_negated[i - dx_] = w_ * z.y[i - dx_];
  }

 private:
  double coord(Eigen::Index i, const PrimalDualPoint &z) const {
    return i < dx_ ? z.x[i] : z.y[i - dx_];
  }
  double sign(Eigen::Index i) const { return i < dx_ ? 1.0 : -1.0; }
  double w_;
};

void verify_smoothness(VerifyReport &report) {
  {
    AxisQuadratic p(16, 1.0);
    const double est = estimate_average_smoothness(p, 30, 1.0, 7);
    add(report, "axis quadratic estimate near exact L", est >= 0.99 && est <= 1.0 + 1e-6,
        "estimate=" + std::to_string(est));
  }
  {
    QuadraticConfig cfg;
    cfg.n = 8;
    cfg.dx = cfg.dy = 4;
    cfg.L = 2.0;
    cfg.mu_x = cfg.mu_y = 0.2;
    cfg.seed = 3;
    auto q = QuadraticProblem::generate(cfg);
    const double exact = q->exact_average_smoothness();
    const double est = estimate_average_smoothness(*q, 30, 1.0, 11);
    add(report, "quadratic generator hits target L", std::abs(exact - cfg.L) < 1e-6,
        "exact=" + std::to_string(exact));
    add(report, "estimator below declared L", est <= cfg.L + 1e-6);
  }
  {
    auto chain = HardChainInstance::make(1.0, 2.0, 6, 4);
    const double est = estimate_average_smoothness(*chain, 30, 1.0, 13);
    add(report, "hard chain estimate below declared L",
        est <= chain->constants().L + 1e-6);
  }
}

void verify_saddles(VerifyReport &report) {
  {
    QuadraticConfig cfg;
    cfg.n = 6;
    cfg.dx = 3;
    cfg.dy = 4;
    cfg.L = 3.0;
    cfg.mu_x = 0.3;
    cfg.mu_y = 0.6;
    cfg.seed = 21;
    auto q = QuadraticProblem::generate(cfg);
    const double g = gradient_operator(*q, q->known_saddle()).norm();
    add(report, "quadratic saddle zeroes gradient", g <= 1e-9, "norm=" + std::to_string(g));
  }
  {
    auto chain = HardChainInstance::make(0.7, 3.0, 9, 3);
    const double g = gradient_operator(*chain, chain->known_saddle()).norm();
    add(report, "hard chain saddle zeroes gradient", g <= 1e-10 * chain->lambda_h());
    const double identity = chain->alpha_h() * chain->omega() - (1.0 - chain->q_h());
    add(report, "chain identity alpha*omega = 1-q", std::abs(identity) <= 1e-12);
  }
  {
    auto sep = SeparableHardInstance::build(4.0, 0.5, 8);
    const double g = gradient_operator(*sep, sep->known_saddle()).norm();
    add(report, "separable saddle zeroes gradient", g <= 1e-10);
  }
}

void verify_zero_chain(VerifyReport &report) {
  auto chain = HardChainInstance::make(1.0, 1.0, 8, 4);
  auto recorder = std::make_shared<RecordingProblem>(chain);
  LsvreParams params = lsvre_default_params(*chain);
  params.T = 50;
  params.seed = 5;
  const PrimalDualPoint z0 = PrimalDualPoint::Zero(chain->dx(), chain->dy());
  lsvre_run(recorder, z0, params, 0);
  const ZeroChainReport ok = zero_chain_audit(*chain, z0, recorder->queries());
  add(report, "solver trace respects zero-chain supports", ok.pass, ok.message);

  std::vector<ZeroChainStep> planted = {{z0, 0}};
  PrimalDualPoint bad = z0;
  bad.x[chain->block_dim() - 1] = 1.0;  // coordinate d of block 0 after one draw
  planted.push_back({bad, 0});
  const ZeroChainReport caught = zero_chain_audit(*chain, z0, planted);
  add(report, "planted violation is caught",
      !caught.pass && caught.first_violation_step == 1, caught.message);
}

void verify_lemmas(VerifyReport &report) {
  Rng rng(33);
  bool gap_nonneg = true, dist_bound = true, sandwich = true;
  for (int rep = 0; rep < 5; ++rep) {
    QuadraticConfig cfg;
    cfg.n = 5;
    cfg.dx = cfg.dy = 3;
    cfg.L = 2.0;
    cfg.mu_x = 0.4;
    cfg.mu_y = 0.9;
    cfg.seed = 100 + static_cast<std::uint64_t>(rep);
    auto q = QuadraticProblem::generate(cfg);
    const PrimalDualPoint star = q->known_saddle();
    for (int t = 0; t < 40; ++t) {
      const PrimalDualPoint z{random_vector(3, 2.0, rng), random_vector(3, 2.0, rng)};
      const double gap = q->duality_gap(z);
      if (gap < -1e-10) gap_nonneg = false;
      const double lhs = cfg.mu_x * (z.x - star.x).squaredNorm() +
                         cfg.mu_y * (z.y - star.y).squaredNorm();
      if (lhs > 2.0 * gap + 1e-9) dist_bound = false;
    }

    // two-sided lift sandwich on a box-constrained copy
    const double eps = 0.05;
    auto wrapped = wrap_both(q, eps, 4.0, 4.0, Vector::Zero(3), Vector::Zero(3));
    for (int t = 0; t < 40; ++t) {
      const PrimalDualPoint z{random_vector(3, 1.0, rng), random_vector(3, 1.0, rng)};
      if (std::abs(q->value(z) - wrapped->value(z)) > eps / 4.0 + 1e-12)
        sandwich = false;
    }
  }
  add(report, "quadratic duality gap nonnegative", gap_nonneg);
  add(report, "gap dominates weighted squared distance", dist_bound);
  add(report, "lift changes objective by at most eps/4", sandwich);
}

}  // namespace

VerifyReport run_verify_suite(const std::string &suite) {
  VerifyReport report;
  bool known = false;
  if (suite == "projections" || suite == "all") {
    verify_projections(report);
    known = true;
  }
  if (suite == "smoothness" || suite == "all") {
    verify_smoothness(report);
    known = true;
  }
  if (suite == "saddles" || suite == "all") {
    verify_saddles(report);
    known = true;
  }
  if (suite == "zero_chain" || suite == "all") {
    verify_zero_chain(report);
    known = true;
  }
  if (suite == "lemmas" || suite == "all") {
    verify_lemmas(report);
    known = true;
  }
  if (!known) throw UsageError("unknown verify suite '" + suite + "'");
  return report;
}

}  // namespace minimax

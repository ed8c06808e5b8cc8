#include <cmath>

#include "doctest.h"
#include "minimax/metrics.hpp"
#include "minimax/quadratic.hpp"
#include "minimax/rng.hpp"
#include "minimax/solvers.hpp"
#include "test_support.hpp"

using namespace minimax;

namespace {

std::shared_ptr<QuadraticProblem> bilinear_1d() {
  // f(x, y) = x y; merely convex-concave, L declared as 1
  Matrix A = Matrix::Zero(1, 1), B = Matrix::Identity(1, 1), C = Matrix::Zero(1, 1);
  return testsupport::single_quadratic(A, B, C, 1.0, 0.0, 0.0);
}

ProblemConstants constants_for(Eigen::Index n, double L, double mu_x, double mu_y) {
  ProblemConstants c;
  c.n = n;
  c.L = L;
  c.mu_x = mu_x;
  c.mu_y = mu_y;
  return c;
}

struct FakeProblem : Problem {
  explicit FakeProblem(ProblemConstants c)
      : Problem(1, 1, c,
                PrimalDualSet{FeasibleSet::whole_space(), FeasibleSet::whole_space()}) {}
  double value(const PrimalDualPoint &) const override { return 0.0; }
  double component_value(Eigen::Index, const PrimalDualPoint &) const override {
    return 0.0;
  }
  void component_gradient(Eigen::Index, const PrimalDualPoint &,
                          GradientPair &out) const override {
    out.set_zero();
  }
};

}  // namespace

TEST_CASE("default step size and refresh probability") {
  // tau = 1/(4 sqrt(n) L), p = 1/(2n)
  {
    FakeProblem p(constants_for(4, 1.0, 0.1, 0.1));
    const LsvreParams d = lsvre_default_params(p);
    CHECK(d.tau == doctest::Approx(1.0 / 8.0));
    CHECK(d.p == doctest::Approx(1.0 / 8.0));
  }
  {
    FakeProblem p(constants_for(1, 2.0, 0.1, 0.1));
    const LsvreParams d = lsvre_default_params(p);
    CHECK(d.tau == doctest::Approx(1.0 / 8.0));
    CHECK(d.p == doctest::Approx(0.5));
  }
  {
    FakeProblem p(constants_for(100, 10.0, 0.1, 0.1));
    const LsvreParams d = lsvre_default_params(p);
    CHECK(d.tau == doctest::Approx(1.0 / 400.0));
    CHECK(d.p == doctest::Approx(1.0 / 200.0));
  }
}

TEST_CASE("parameter validation") {
  LsvreParams p;
  p.tau = 0.0;
  p.p = 0.5;
  CHECK_THROWS_AS(p.validate(), UsageError);
  p.tau = 0.1;
  p.p = 1.5;
  CHECK_THROWS_AS(p.validate(), UsageError);
  p.p = 0.5;
  p.T = -1;
  CHECK_THROWS_AS(p.validate(), UsageError);
  p.T = 10;
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("extragradient hand-worked step on f = x y") {
  auto prob = bilinear_1d();
  PrimalDualPoint z0{Vector::Ones(1), Vector::Ones(1)};
  const SolverTrace t = extragradient_run(prob, z0, 0.5, 1, 0);
  // z_half = (1 - 0.5*1, 1 + 0.5*1) = (0.5, 1.5)
  // z_1 = (1 - 0.5*1.5, 1 + 0.5*0.5) = (0.25, 1.25)
  CHECK(t.final_point.x[0] == doctest::Approx(0.25));
  CHECK(t.final_point.y[0] == doctest::Approx(1.25));
  CHECK(t.total_sfo == 2);
  CHECK(t.iterations == 1);
}

TEST_CASE("variance-reduced step equals hand computation on f = x y") {
  // With n = 1 the component gradient is the full gradient, so one iteration
  // from z0 = w0 = (1, 1) with tau = 1/8 gives z_1 = z0 - tau g(z_half):
  // z_half = (7/8, 9/8), g(z_half) = (9/8, -7/8),
  // z_1 = (1 - 9/64, 1 + 7/64) = (55/64, 71/64).
  auto prob = bilinear_1d();
  LsvreParams params;
  params.tau = 0.125;
  params.p = 0.5;
  params.T = 1;
  params.seed = 3;
  PrimalDualPoint z0{Vector::Ones(1), Vector::Ones(1)};
  const SolverTrace t = lsvre_run(prob, z0, params, 0);
  CHECK(t.final_point.x[0] == 55.0 / 64.0);
  CHECK(t.final_point.y[0] == 71.0 / 64.0);
}

TEST_CASE("a saddle point is a fixed point of both solvers") {
  QuadraticConfig cfg;
  cfg.n = 6;
  cfg.dx = cfg.dy = 3;
  cfg.L = 2.0;
  cfg.mu_x = cfg.mu_y = 0.4;
  cfg.seed = 14;
  auto q = QuadraticProblem::generate(cfg);
  const PrimalDualPoint star = q->known_saddle();

  const SolverTrace eg = extragradient_run(q, star, 0.1, 5, 0);
  CHECK(distance(eg.final_point, star) < 1e-10);

  LsvreParams params = lsvre_default_params(*q);
  params.T = 20;
  params.seed = 1;
  const SolverTrace vr = lsvre_run(q, star, params, 0);
  CHECK(distance(vr.final_point, star) < 1e-10);
}

TEST_CASE("runs are bitwise deterministic per seed") {
  QuadraticConfig cfg;
  cfg.n = 8;
  cfg.dx = cfg.dy = 4;
  cfg.seed = 2;
  auto q = QuadraticProblem::generate(cfg);
  LsvreParams params = lsvre_default_params(*q);
  params.T = 100;
  params.seed = 77;
  const PrimalDualPoint z0 = PrimalDualPoint::Ones(4, 4);
  const SolverTrace a = lsvre_run(q, z0, params, 10);
  const SolverTrace b = lsvre_run(q, z0, params, 10);
  CHECK(a.final_point.x == b.final_point.x);
  CHECK(a.final_point.y == b.final_point.y);
  CHECK(a.total_sfo == b.total_sfo);
  CHECK(a.snapshot_refreshes == b.snapshot_refreshes);
  params.seed = 78;
  const SolverTrace c = lsvre_run(q, z0, params, 10);
  CHECK(a.final_point.x != c.final_point.x);
}

TEST_CASE("oracle accounting: n + 2T + n * refreshes") {
  QuadraticConfig cfg;
  cfg.n = 8;
  cfg.dx = cfg.dy = 3;
  cfg.seed = 4;
  auto q = QuadraticProblem::generate(cfg);
  LsvreParams params = lsvre_default_params(*q);
  params.T = 200;
  params.seed = 5;
  const SolverTrace t = lsvre_run(q, PrimalDualPoint::Ones(3, 3), params, 0);
  CHECK(t.total_sfo == 8 + 2 * 200 + 8 * t.snapshot_refreshes);
}

TEST_CASE("SFO budget stops a run before it overdraws") {
  QuadraticConfig cfg;
  cfg.n = 16;
  cfg.dx = cfg.dy = 4;
  cfg.seed = 6;
  auto q = QuadraticProblem::generate(cfg);
  LsvreParams params = lsvre_default_params(*q);
  params.T = 100000;
  params.seed = 9;
  const long long budget = 500;
  const SolverTrace t = lsvre_run(q, PrimalDualPoint::Ones(4, 4), params, 0, nullptr,
                                  budget);
  // a coin-flip refresh may overshoot by at most one snapshot
  CHECK(t.total_sfo <= budget + 16);
  CHECK(t.iterations < 100000);

  const SolverTrace e = extragradient_run(q, PrimalDualPoint::Ones(4, 4), 0.01, 100000,
                                          0, nullptr, budget);
  CHECK(e.total_sfo <= budget);
}

TEST_CASE("trace checkpoints are recorded at the requested cadence") {
  QuadraticConfig cfg;
  cfg.n = 4;
  cfg.dx = cfg.dy = 2;
  cfg.seed = 8;
  auto q = QuadraticProblem::generate(cfg);
  MetricSet metrics = MetricSet::dist_to_saddle(q->known_saddle());
  LsvreParams params = lsvre_default_params(*q);
  params.T = 50;
  params.seed = 2;
  const SolverTrace t = lsvre_run(q, PrimalDualPoint::Ones(2, 2), params, 10, &metrics);
  REQUIRE(t.checkpoints.size() == 6);  // 0, 10, ..., 50
  CHECK(t.checkpoints.front().iteration == 0);
  CHECK(t.checkpoints.back().iteration == 50);
  for (const auto &cp : t.checkpoints) REQUIRE(cp.values.size() == 1);
  // the measured distance shrinks overall
  CHECK(t.checkpoints.back().values[0] < t.checkpoints.front().values[0]);
  CHECK(t.measurement_sfo == 0);  // distance metric costs no oracle calls
}

TEST_CASE("contraction at the guaranteed rate with slack") {
  // balanced SCSC instance; mean squared distance after k steps stays below
  // 4 ||z0 - z*||^2 (1 - 1/(4(n + 2 sqrt(n) L/mu)))^k * 1.5
  QuadraticConfig cfg;
  cfg.n = 16;
  cfg.dx = cfg.dy = 4;
  cfg.L = 4.0;
  cfg.mu_x = cfg.mu_y = 0.5;
  cfg.seed = 42;
  auto q = QuadraticProblem::generate(cfg);
  const PrimalDualPoint star = q->known_saddle();
  const PrimalDualPoint z0 = PrimalDualPoint::Ones(4, 4);
  const double d0 = (PrimalDualPoint{z0.x - star.x, z0.y - star.y}).squared_norm();
  const double rate = 1.0 - 1.0 / (4.0 * (16.0 + 2.0 * 4.0 * 4.0 / 0.5));

  LsvreParams params = lsvre_default_params(*q);
  params.T = 500;
  MetricSet metrics = MetricSet::dist_to_saddle(star);
  double mean_100 = 0.0, mean_500 = 0.0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    params.seed = 1000 + static_cast<std::uint64_t>(s);
    const SolverTrace t = lsvre_run(q, z0, params, 100, &metrics);
    mean_100 += t.checkpoints[1].values[0];
    mean_500 += t.checkpoints[5].values[0];
  }
  mean_100 /= seeds;
  mean_500 /= seeds;
  CHECK(mean_100 <= 4.0 * d0 * std::pow(rate, 100) * 1.5);
  CHECK(mean_500 <= 4.0 * d0 * std::pow(rate, 500) * 1.5);
}

TEST_CASE("proximal weight three-case rule") {
  ScheduleOptions opt;
  {
    // kappa_y >= sqrt(n): beta = mu_y - mu_x
    FakeProblem p(constants_for(64, 4.0, 0.02, 0.5));  // sqrt(n)=8, ky=8
    const ScheduleParams s = alsvre_default_params(p, 1e-6, ScheduleMode::Practical, opt);
    CHECK(s.beta == doctest::Approx(0.48));
  }
  {
    // kappa_x > sqrt(n) > kappa_y: beta = L/sqrt(n) - mu_x
    FakeProblem p(constants_for(16, 8.0, 0.1, 4.0));  // sqrt(n)=4, kx=80, ky=2
    const ScheduleParams s = alsvre_default_params(p, 1e-6, ScheduleMode::Practical, opt);
    CHECK(s.beta == doctest::Approx(8.0 / 4.0 - 0.1));
  }
  {
    // both condition numbers below sqrt(n): beta = 0
    FakeProblem p(constants_for(100, 5.0, 1.0, 1.0));  // sqrt(n)=10, kx=ky=5
    const ScheduleParams s = alsvre_default_params(p, 1e-6, ScheduleMode::Practical, opt);
    CHECK(s.beta == doctest::Approx(0.0));
  }
}

TEST_CASE("derived schedule quantities") {
  FakeProblem p(constants_for(64, 4.0, 0.02, 0.5));
  ScheduleOptions opt;
  const ScheduleParams s = alsvre_default_params(p, 1e-6, ScheduleMode::Practical, opt);
  CHECK(s.q == doctest::Approx(0.02 / (0.02 + s.beta)));
  const double sq = std::sqrt(s.q);
  CHECK(s.gamma == doctest::Approx((1.0 - sq) / (1.0 + sq)));
  CHECK(s.rho == doctest::Approx(0.5 * sq));
  CHECK(s.p == doctest::Approx(1.0 / 128.0));
  REQUIRE(!s.tau_k.empty());
  CHECK(s.tau_k.front() == doctest::Approx(1.0 / (4.0 * 8.0 * (4.0 + s.beta))));
  CHECK(s.T_k.front() == 32);  // ceil(0.5 * 64)
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("schedule option overrides") {
  FakeProblem p(constants_for(64, 4.0, 0.02, 0.5));
  ScheduleOptions opt;
  opt.practical_c = 2.0;
  opt.tau = 0.05;
  opt.beta = 1.25;
  opt.p = 0.25;
  opt.rho = 0.01;
  opt.K_override = 7;
  const ScheduleParams s = alsvre_default_params(p, 1e-6, ScheduleMode::Practical, opt);
  CHECK(s.beta == doctest::Approx(1.25));
  CHECK(s.p == doctest::Approx(0.25));
  CHECK(s.rho == doctest::Approx(0.01));
  CHECK(s.K == 7);
  REQUIRE(s.tau_k.size() == 7);
  CHECK(s.tau_k.front() == doctest::Approx(0.05));
  CHECK(s.T_k.front() == 128);
}

TEST_CASE("practical round count follows the budget") {
  FakeProblem p(constants_for(64, 4.0, 0.02, 0.5));
  ScheduleOptions opt;
  opt.budget_sfo = 6400;
  const ScheduleParams s = alsvre_default_params(p, 1e-6, ScheduleMode::Practical, opt);
  // round cost = 64 (snapshot) + 32 * (p*64 + 2) + 64 (correction)
  const double round_cost = 64.0 + 32.0 * (s.p * 64.0 + 2.0) + 64.0;
  CHECK(s.K == static_cast<long long>(std::floor(6400.0 / round_cost)));
}

TEST_CASE("theory schedule accuracy sequences decay geometrically") {
  FakeProblem p(constants_for(16, 2.0, 0.2, 0.4));
  const TheorySchedule ts = make_theory_schedule(p, 0.2, 0.1, 0.5, 3.0);
  double prev_eps = 1e300, prev_delta = 1e300;
  for (long long k = 0; k < 10; ++k) {
    const double e = ts.epsilon_k(k);
    const double d = ts.delta_k(k);
    CHECK(e > 0.0);
    CHECK(d > 0.0);
    CHECK(e < prev_eps);
    CHECK(d < prev_delta);
    CHECK(e == doctest::Approx(ts.epsilon_k(0) * std::pow(1.0 - ts.rho, k)));
    prev_eps = e;
    prev_delta = d;
  }
}

TEST_CASE("theory mode derives inner length and round count from the bound") {
  FakeProblem p(constants_for(16, 2.0, 0.2, 0.4));
  ScheduleOptions opt;
  opt.delta_f = 5.0;
  const double epsilon = 1e-4;
  const ScheduleParams s = alsvre_default_params(p, epsilon, ScheduleMode::Theory, opt);
  const auto &c = p.constants();
  const double n = 16.0, sqn = 4.0;
  const double Lb = c.L + s.beta;
  const double sq = std::sqrt(s.q);
  const double r = sq - s.rho;
  const double mu_min = std::min(c.mu_x, c.mu_y);
  const double log_arg =
      12.0 * (2.0 / (1.0 - s.rho) +
              1728.0 * s.beta * Lb * (7.0 * Lb + 2.0 * sqn * c.mu_y) /
                  (c.mu_x * c.mu_y * mu_min * (1.0 - s.rho) * (1.0 - s.rho) * r * r));
  const auto T = static_cast<long long>(std::ceil(
      4.0 * (n + 2.0 * sqn * Lb / std::min(c.mu_x + s.beta, c.mu_y)) *
      std::log(log_arg)));
  CHECK(s.T_k.front() == T);
  const double kx = c.kappa_x(), ky = c.kappa_y();
  const auto K = static_cast<long long>(std::ceil(
      (2.0 / sq) * std::log(10992.0 * sqn * 5.0 * ky * kx * kx * kx / epsilon)));
  CHECK(s.K == K);
}

TEST_CASE("schedule preconditions") {
  FakeProblem cc(constants_for(4, 1.0, 0.0, 0.5));
  CHECK_THROWS_AS(alsvre_default_params(cc, 1e-3, ScheduleMode::Practical, {}),
                  UsageError);
  FakeProblem flipped(constants_for(4, 1.0, 0.5, 0.1));
  CHECK_THROWS_AS(alsvre_default_params(flipped, 1e-3, ScheduleMode::Practical, {}),
                  UsageError);
  FakeProblem ok(constants_for(4, 1.0, 0.1, 0.5));
  CHECK_THROWS_AS(alsvre_default_params(ok, 0.0, ScheduleMode::Practical, {}),
                  UsageError);
}

TEST_CASE("one outer round with beta = 0 reduces to the inner solver plus correction") {
  QuadraticConfig cfg;
  cfg.n = 4;
  cfg.dx = cfg.dy = 2;
  cfg.L = 2.0;
  cfg.mu_x = cfg.mu_y = 0.5;
  cfg.seed = 3;
  auto q = QuadraticProblem::generate(cfg);

  ScheduleParams sp;
  sp.beta = 0.0;
  sp.q = 1.0;
  sp.gamma = 0.0;
  sp.rho = 0.5;
  sp.p = 0.25;
  sp.K = 1;
  sp.tau_k = {0.05};
  sp.T_k = {30};
  sp.seed = 21;
  const PrimalDualPoint z0 = PrimalDualPoint::Ones(2, 2);
  const SolverTrace outer = alsvre_run(q, z0, sp, 0);

  LsvreParams inner;
  inner.tau = 0.05;
  inner.p = 0.25;
  inner.T = 30;
  inner.seed = Rng::derive(21, 1);  // round-1 child stream
  const SolverTrace plain = lsvre_run(q, z0, inner, 0);
  GradientPair g(2, 2);
  q->full_gradient(plain.final_point, g);
  const PrimalDualPoint corrected{plain.final_point.x - 0.05 * g.gx,
                                  plain.final_point.y - 0.05 * g.gy_negated};
  CHECK(outer.final_point.x == corrected.x);
  CHECK(outer.final_point.y == corrected.y);
  CHECK(outer.total_sfo == plain.total_sfo + 4);
}

TEST_CASE("accelerated solver converges on an unbalanced instance") {
  QuadraticConfig cfg;
  cfg.n = 16;
  cfg.dx = cfg.dy = 4;
  cfg.L = 4.0;
  cfg.mu_x = 0.05;
  cfg.mu_y = 0.5;
  cfg.seed = 19;
  auto q = QuadraticProblem::generate(cfg);
  MetricSet metrics = MetricSet::dist_to_saddle(q->known_saddle());
  ScheduleOptions opt;
  opt.budget_sfo = 20000;
  opt.seed = 11;
  const PrimalDualPoint z0 = PrimalDualPoint::Ones(4, 4);
  const SolverTrace t = alsvre_solve(q, z0, 1e-6, ScheduleMode::Practical, opt, 0,
                                     &metrics, 20000);
  CHECK(t.total_sfo <= 20000 + 16);
  REQUIRE(t.checkpoints.size() >= 2);
  CHECK(t.checkpoints.back().values[0] < 1e-2 * t.checkpoints.front().values[0]);
}

TEST_CASE("role-swapped front end handles mu_x > mu_y") {
  QuadraticConfig cfg;
  cfg.n = 8;
  cfg.dx = 3;
  cfg.dy = 2;
  cfg.L = 2.0;
  cfg.mu_x = 0.8;
  cfg.mu_y = 0.1;
  cfg.seed = 29;
  auto q = QuadraticProblem::generate(cfg);
  MetricSet metrics = MetricSet::dist_to_saddle(q->known_saddle());
  ScheduleOptions opt;
  opt.budget_sfo = 10000;
  opt.seed = 4;
  const SolverTrace t = alsvre_solve(q, PrimalDualPoint::Ones(3, 2), 1e-6,
                                     ScheduleMode::Practical, opt, 0, &metrics, 10000);
  // final point comes back in the original orientation
  CHECK(t.final_point.x.size() == 3);
  CHECK(t.final_point.y.size() == 2);
  CHECK(t.checkpoints.back().values[0] < 1e-2);
}

#include <cmath>

#include "doctest.h"
#include "minimax/auc.hpp"
#include "minimax/lowerbound.hpp"
#include "minimax/quadratic.hpp"
#include "minimax/regularized.hpp"
#include "minimax/rng.hpp"
#include "minimax/wireless.hpp"
#include "test_support.hpp"

using namespace minimax;

namespace {

// central finite differences of the operator (grad_x f_i, -grad_y f_i)
void check_component_fd(const Problem &p, Eigen::Index i, const PrimalDualPoint &z,
                        double h = 1e-6, double tol = 2e-4) {
  GradientPair g(p.dx(), p.dy());
  p.component_gradient(i, z, g);
  for (Eigen::Index j = 0; j < p.dx(); ++j) {
    PrimalDualPoint zp = z, zm = z;
    zp.x[j] += h;
    zm.x[j] -= h;
    const double fd = (p.component_value(i, zp) - p.component_value(i, zm)) / (2.0 * h);
    CHECK(g.gx[j] == doctest::Approx(fd).epsilon(tol).scale(1.0));
  }
  for (Eigen::Index j = 0; j < p.dy(); ++j) {
    PrimalDualPoint zp = z, zm = z;
    zp.y[j] += h;
    zm.y[j] -= h;
    const double fd = (p.component_value(i, zp) - p.component_value(i, zm)) / (2.0 * h);
    CHECK(g.gy_negated[j] == doctest::Approx(-fd).epsilon(tol).scale(1.0));
  }
}

PrimalDualPoint random_point(Eigen::Index dx, Eigen::Index dy, double scale, Rng &rng) {
  PrimalDualPoint z = PrimalDualPoint::Zero(dx, dy);
  for (Eigen::Index j = 0; j < dx; ++j) z.x[j] = scale * rng.normal();
  for (Eigen::Index j = 0; j < dy; ++j) z.y[j] = scale * rng.normal();
  return z;
}

}  // namespace

TEST_CASE("scalar quadratic saddle is at the origin") {
  auto q = testsupport::scalar_saddle(1.0, 2.0);
  CHECK(q->has_known_saddle());
  const PrimalDualPoint star = q->known_saddle();
  CHECK(star.x[0] == doctest::Approx(0.0));
  CHECK(star.y[0] == doctest::Approx(0.0));
  CHECK(gradient_operator(*q, star).norm() == doctest::Approx(0.0));
}

TEST_CASE("scalar quadratic values and gradients by hand") {
  // f(x, y) = (1/2) x^2 + x y - (1/2) y^2
  auto q = testsupport::scalar_saddle(1.0, 2.0);
  PrimalDualPoint z{Vector::Ones(1), 2.0 * Vector::Ones(1)};
  CHECK(q->value(z) == doctest::Approx(0.5 + 2.0 - 2.0));
  const GradientPair g = gradient_operator(*q, z);
  CHECK(g.gx[0] == doctest::Approx(1.0 + 2.0));    // x + y
  CHECK(g.gy_negated[0] == doctest::Approx(1.0));  // -(x - y) = y - x ... = 2 - 1
}

TEST_CASE("scalar quadratic duality gap by hand") {
  // gap at (1, 0): max_y f(1,y) - min_x f(x,0) = 1 - 0 = 1
  auto q = testsupport::scalar_saddle(1.0, 2.0);
  PrimalDualPoint z{Vector::Ones(1), Vector::Zero(1)};
  CHECK(q->duality_gap(z) == doctest::Approx(1.0));
  CHECK(q->duality_gap(q->known_saddle()) == doctest::Approx(0.0));
}

TEST_CASE("generated quadratic attains its declared constants") {
  QuadraticConfig cfg;
  cfg.n = 10;
  cfg.dx = 5;
  cfg.dy = 4;
  cfg.L = 3.0;
  cfg.mu_x = 0.2;
  cfg.mu_y = 0.7;
  cfg.seed = 17;
  auto q = QuadraticProblem::generate(cfg);
  CHECK(q->exact_average_smoothness() == doctest::Approx(cfg.L).epsilon(1e-6));
  // mean curvature blocks carry the declared moduli as smallest eigenvalues
  Eigen::SelfAdjointEigenSolver<Matrix> ea(q->mean_A());
  Eigen::SelfAdjointEigenSolver<Matrix> ec(q->mean_C());
  CHECK(ea.eigenvalues().minCoeff() == doctest::Approx(cfg.mu_x).epsilon(1e-8));
  CHECK(ec.eigenvalues().minCoeff() == doctest::Approx(cfg.mu_y).epsilon(1e-8));
  CHECK(gradient_operator(*q, q->known_saddle()).norm() < 1e-9);
}

TEST_CASE("generated quadratic is deterministic per seed") {
  QuadraticConfig cfg;
  cfg.n = 4;
  cfg.dx = cfg.dy = 3;
  cfg.seed = 5;
  auto a = QuadraticProblem::generate(cfg);
  auto b = QuadraticProblem::generate(cfg);
  Rng rng(1);
  const PrimalDualPoint z = random_point(3, 3, 1.0, rng);
  CHECK(a->value(z) == b->value(z));
  cfg.seed = 6;
  auto c = QuadraticProblem::generate(cfg);
  CHECK(a->value(z) != c->value(z));
}

TEST_CASE("quadratic component finite differences") {
  QuadraticConfig cfg;
  cfg.n = 5;
  cfg.dx = 3;
  cfg.dy = 2;
  cfg.seed = 9;
  auto q = QuadraticProblem::generate(cfg);
  Rng rng(2);
  const PrimalDualPoint z = random_point(3, 2, 1.5, rng);
  for (Eigen::Index i = 0; i < q->num_components(); ++i) check_component_fd(*q, i, z);
}

TEST_CASE("monotonicity of the quadratic gradient operator") {
  QuadraticConfig cfg;
  cfg.n = 6;
  cfg.dx = cfg.dy = 4;
  cfg.L = 2.0;
  cfg.mu_x = 0.3;
  cfg.mu_y = 0.8;
  cfg.seed = 23;
  auto q = QuadraticProblem::generate(cfg);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const PrimalDualPoint z1 = random_point(4, 4, 2.0, rng);
    const PrimalDualPoint z2 = random_point(4, 4, 2.0, rng);
    const GradientPair g1 = gradient_operator(*q, z1);
    const GradientPair g2 = gradient_operator(*q, z2);
    const double inner = (g1.gx - g2.gx).dot(z1.x - z2.x) +
                         (g1.gy_negated - g2.gy_negated).dot(z1.y - z2.y);
    const double lower = cfg.mu_x * (z1.x - z2.x).squaredNorm() +
                         cfg.mu_y * (z1.y - z2.y).squaredNorm();
    CHECK(inner >= lower - 1e-9);
  }
}

TEST_CASE("auc problem counts labels and dimensions") {
  std::vector<LabeledSparseRow> rows(4);
  rows[0].features = {{0, 1.0}, {2, -0.5}};
  rows[0].label = 1;
  rows[1].features = {{1, 2.0}};
  rows[1].label = -1;
  rows[2].features = {{0, 0.5}, {3, 1.5}};
  rows[2].label = -1;
  rows[3].features = {{2, 1.0}};
  rows[3].label = 1;
  auto p = AucProblem::make(rows, 0.1);
  CHECK(p->p_hat() == doctest::Approx(0.5));
  CHECK(p->feature_dim() == 4);
  CHECK(p->dx() == 6);  // theta (4) + offsets u, v
  CHECK(p->dy() == 1);
  CHECK(p->constants().mu_x == doctest::Approx(0.1));
  CHECK(p->constants().mu_y == doctest::Approx(2.0 * 0.5 * 0.5));
  CHECK(p->constants().L > 0.0);
}

TEST_CASE("auc problem rejects single-class data") {
  std::vector<LabeledSparseRow> rows(2);
  rows[0].features = {{0, 1.0}};
  rows[0].label = 1;
  rows[1].features = {{1, 1.0}};
  rows[1].label = 1;
  CHECK_THROWS_AS(AucProblem::make(rows, 0.1), UsageError);
}

TEST_CASE("auc component finite differences") {
  std::vector<LabeledSparseRow> rows(4);
  rows[0].features = {{0, 1.0}, {1, -0.3}};
  rows[0].label = 1;
  rows[1].features = {{1, 0.8}};
  rows[1].label = -1;
  rows[2].features = {{0, -0.4}, {2, 0.9}};
  rows[2].label = -1;
  rows[3].features = {{2, 0.6}};
  rows[3].label = 1;
  auto p = AucProblem::make(rows, 0.05);
  Rng rng(4);
  const PrimalDualPoint z = random_point(p->dx(), p->dy(), 0.7, rng);
  for (Eigen::Index i = 0; i < p->num_components(); ++i) check_component_fd(*p, i, z);
}

TEST_CASE("auc value averages component values") {
  std::vector<LabeledSparseRow> rows(3);
  rows[0].features = {{0, 1.0}};
  rows[0].label = 1;
  rows[1].features = {{0, -1.0}};
  rows[1].label = -1;
  rows[2].features = {{1, 0.5}};
  rows[2].label = -1;
  auto p = AucProblem::make(rows, 0.2);
  Rng rng(5);
  const PrimalDualPoint z = random_point(p->dx(), p->dy(), 0.5, rng);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < p->num_components(); ++i) acc += p->component_value(i, z);
  CHECK(p->value(z) == doctest::Approx(acc / 3.0));
}

TEST_CASE("wireless value by hand") {
  // single channel, a = b = 1: f(x, y) = -log(1 + x / (1 + y))
  auto p = WirelessProblem::make(Vector::Ones(1), Vector::Ones(1), 2.0);
  PrimalDualPoint z{Vector::Ones(1), Vector::Ones(1)};
  CHECK(p->value(z) == doctest::Approx(-std::log(1.5)));
  z.x[0] = 0.0;
  CHECK(p->value(z) == doctest::Approx(0.0));
}

TEST_CASE("wireless component finite differences") {
  auto p = WirelessProblem::generate(4, 1.0, 0.5, 2.0, 31);
  PrimalDualPoint z{Vector::Constant(4, 0.3), Vector::Constant(4, 1.0)};
  for (Eigen::Index i = 0; i < 4; ++i) check_component_fd(*p, i, z);
}

TEST_CASE("wireless sparse channel matches dense gradients") {
  auto p = WirelessProblem::generate(5, 1.0, 0.5, 2.0, 8);
  PrimalDualPoint z{Vector::Constant(5, 0.2), Vector::Constant(5, 1.0)};
  GradientPair dense(5, 5);
  std::vector<SparseTriple> sparse;
  for (Eigen::Index i = 0; i < 5; ++i) {
    p->component_gradient(i, z, dense);
    CHECK(p->component_gradient_sparse(i, z, sparse));
    CHECK(sparse.size() == 2);
    GradientPair rebuilt(5, 5);
    for (const auto &t : sparse) {
      if (t.block == 0)
        rebuilt.gx[t.index] += t.value;
      else
        rebuilt.gy_negated[t.index] += t.value;
    }
    CHECK((dense.gx - rebuilt.gx).norm() == doctest::Approx(0.0));
    CHECK((dense.gy_negated - rebuilt.gy_negated).norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("wireless rejects invalid channel parameters") {
  Vector bad_a(2);
  bad_a << -0.5, 1.0;
  CHECK_THROWS_AS(WirelessProblem::make(bad_a, Vector::Ones(2), 1.0), UsageError);
  Vector bad_b(2);
  bad_b << 1.0, 0.0;
  CHECK_THROWS_AS(WirelessProblem::make(Vector::Ones(2), bad_b, 1.0), UsageError);
}

TEST_CASE("wireless gradient at a degenerate denominator throws") {
  auto p = WirelessProblem::make(Vector::Ones(1), Vector::Ones(1), 1.0);
  PrimalDualPoint z{Vector::Constant(1, 0.5), Vector::Constant(1, -2.0)};
  GradientPair g(1, 1);
  CHECK_THROWS_AS(p->component_gradient(0, z, g), NumericError);
}

TEST_CASE("wireless generator is deterministic per seed") {
  auto a = WirelessProblem::generate(6, 1.0, 0.0, 10.0, 7);
  auto b = WirelessProblem::generate(6, 1.0, 0.0, 10.0, 7);
  auto c = WirelessProblem::generate(6, 1.0, 0.0, 10.0, 8);
  CHECK((a->channel_noise() - b->channel_noise()).norm() == 0.0);
  CHECK((a->channel_noise() - c->channel_noise()).norm() != 0.0);
  CHECK(a->channel_noise().minCoeff() >= 0.0);
  CHECK(a->channel_noise().maxCoeff() <= 10.0);
}

TEST_CASE("one-sided lift adds the declared strong convexity") {
  // merely convex in x: A = 0, strongly concave in y
  Matrix A = Matrix::Zero(2, 2), B(2, 2), C = Matrix::Identity(2, 2);
  B << 1.0, 0.5, -0.5, 1.0;
  auto inner = testsupport::single_quadratic(A, B, C, 2.0, 0.0, 1.0);
  const double eps = 0.1, Dx = 2.0;
  auto wrapped = wrap_strongly_concave(inner, eps, Dx, Vector::Zero(2));
  CHECK(wrapped->constants().mu_x == doctest::Approx(eps / (4.0 * Dx * Dx)));
  CHECK(wrapped->constants().mu_y == doctest::Approx(1.0));
  CHECK(wrapped->constants().L == doctest::Approx(4.0));  // doubled
  // gradient picks up 2 w (x - x0)
  PrimalDualPoint z{Vector::Ones(2), Vector::Ones(2)};
  const GradientPair gi = gradient_operator(*inner, z);
  const GradientPair gw = gradient_operator(*wrapped, z);
  const double w = eps / (4.0 * Dx * Dx);
  CHECK((gw.gx - gi.gx - 2.0 * w * z.x).norm() == doctest::Approx(0.0));
  CHECK((gw.gy_negated - gi.gy_negated).norm() == doctest::Approx(0.0));
}

TEST_CASE("one-sided lift validates preconditions") {
  Matrix A = Matrix::Zero(1, 1), B = Matrix::Identity(1, 1), C = Matrix::Identity(1, 1);
  auto inner = testsupport::single_quadratic(A, B, C, 1.0, 0.0, 1.0);
  CHECK_THROWS_AS(wrap_strongly_concave(inner, 100.0, 1.0, Vector::Zero(1)),
                  UsageError);  // eps > 4 L Dx^2
  auto cc = testsupport::single_quadratic(A, B, Matrix::Zero(1, 1), 1.0, 0.0, 0.0);
  CHECK_THROWS_AS(wrap_strongly_concave(cc, 0.1, 1.0, Vector::Zero(1)), UsageError);
}

TEST_CASE("two-sided lift changes the objective by at most eps/4") {
  Matrix A = Matrix::Zero(2, 2), B(2, 2), C = Matrix::Zero(2, 2);
  B << 1.0, 0.0, 0.0, -1.0;
  auto inner = testsupport::single_quadratic(A, B, C, 1.0, 0.0, 0.0);
  const double eps = 0.2, Dx = 2.0, Dy = 2.0;
  auto wrapped = wrap_both(inner, eps, Dx, Dy, Vector::Zero(2), Vector::Zero(2));
  CHECK(wrapped->constants().mu_x == doctest::Approx(eps / (8.0 * Dx * Dx)));
  CHECK(wrapped->constants().mu_y == doctest::Approx(eps / (8.0 * Dy * Dy)));
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    // points inside the diameter-Dx / Dy boxes around the anchors
    PrimalDualPoint z = random_point(2, 2, 0.5, rng);
    if (z.x.norm() > Dx / 2.0 || z.y.norm() > Dy / 2.0) continue;
    CHECK(std::abs(wrapped->value(z) - inner->value(z)) <= eps / 4.0 + 1e-12);
  }
}

TEST_CASE("proximal shift adds curvature around the anchor") {
  auto q = testsupport::scalar_saddle(0.5, 2.0);
  Vector u(1);
  u << 2.0;
  auto shifted = proximal_shift(q, 1.5, u);
  CHECK(shifted->constants().L == doctest::Approx(2.0 + 1.5));
  CHECK(shifted->constants().mu_x == doctest::Approx(0.5 + 1.5));
  CHECK(shifted->constants().mu_y == doctest::Approx(0.5));
  PrimalDualPoint z{Vector::Zero(1), Vector::Zero(1)};
  const GradientPair g = gradient_operator(*shifted, z);
  // inner gradient is zero at the origin; shift contributes beta (x - u)
  CHECK(g.gx[0] == doctest::Approx(1.5 * (0.0 - 2.0)));
  CHECK(shifted->value(z) == doctest::Approx(q->value(z) + 0.75 * 4.0));
}

TEST_CASE("transposed problem swaps roles and negates the objective") {
  QuadraticConfig cfg;
  cfg.n = 3;
  cfg.dx = 2;
  cfg.dy = 4;
  cfg.mu_x = 0.2;
  cfg.mu_y = 0.6;
  cfg.seed = 12;
  auto q = QuadraticProblem::generate(cfg);
  auto t = std::make_shared<TransposedProblem>(q);
  CHECK(t->dx() == 4);
  CHECK(t->dy() == 2);
  CHECK(t->constants().mu_x == doctest::Approx(0.6));
  CHECK(t->constants().mu_y == doctest::Approx(0.2));
  Rng rng(9);
  const PrimalDualPoint z = random_point(2, 4, 1.0, rng);
  const PrimalDualPoint swapped = TransposedProblem::swap(z);
  CHECK(t->value(swapped) == doctest::Approx(-q->value(z)));
  const GradientPair g = gradient_operator(*q, z);
  const GradientPair gt = gradient_operator(*t, swapped);
  CHECK((gt.gx - g.gy_negated).norm() == doctest::Approx(0.0));
  CHECK((gt.gy_negated - g.gx).norm() == doctest::Approx(0.0));
  CHECK(distance(TransposedProblem::swap(t->known_saddle()), q->known_saddle()) ==
        doctest::Approx(0.0));
}

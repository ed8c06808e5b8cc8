#ifndef TESTS_TEST_SUPPORT_HPP
#define TESTS_TEST_SUPPORT_HPP

#include <memory>
#include <vector>

#include "minimax/problem.hpp"
#include "minimax/quadratic.hpp"

namespace testsupport {

using namespace minimax;

// n components, each owning one coordinate of z with weight sqrt(n)*L; the
// average-smoothness constant of the family is exactly L.
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
    return 0.5 * w_ * v * v * (i < dx_ ? 1.0 : -1.0);
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
  double w_;
};

// Single-component quadratic f(x, y) = 1/2 x'A x + x'B y - 1/2 y'C y with
// unconstrained variables; A, B, C given explicitly.
inline std::shared_ptr<QuadraticProblem> single_quadratic(
    Matrix A, Matrix B, Matrix C, double L, double mu_x, double mu_y) {
  ProblemConstants constants;
  constants.n = 1;
  constants.L = L;
  constants.mu_x = mu_x;
  constants.mu_y = mu_y;
  const Eigen::Index dx = A.rows();
  const Eigen::Index dy = C.rows();
  return std::make_shared<QuadraticProblem>(
      std::vector<Matrix>{std::move(A)}, std::vector<Matrix>{std::move(B)},
      std::vector<Matrix>{std::move(C)}, std::vector<Vector>{Vector::Zero(dx)},
      std::vector<Vector>{Vector::Zero(dy)}, constants,
      PrimalDualSet{FeasibleSet::whole_space(), FeasibleSet::whole_space()});
}

// 1-D instance f(x, y) = (mu/2) x^2 + x y - (mu/2) y^2.
inline std::shared_ptr<QuadraticProblem> scalar_saddle(double mu, double L) {
  Matrix A(1, 1), B(1, 1), C(1, 1);
  A << mu;
  B << 1.0;
  C << mu;
  return single_quadratic(A, B, C, L, mu, mu);
}

}  // namespace testsupport

#endif

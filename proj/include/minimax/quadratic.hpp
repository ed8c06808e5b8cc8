#ifndef MINIMAX_QUADRATIC_HPP
#define MINIMAX_QUADRATIC_HPP

#include <cstdint>
#include <vector>

#include "minimax/problem.hpp"

namespace minimax {

// Synthetic strongly-convex-strongly-concave quadratic family
//   f_i(x, y) = 1/2 x'A_i x + x'B_i y - 1/2 y'C_i y + a_i'x - c_i'y.
// The generator calibrates a shared scale so the declared average-smoothness
// constant L is attained exactly (up to solver tolerance), and shifts the mean
// curvature so the declared moduli mu_x, mu_y match the true ones.
struct QuadraticConfig {
  Eigen::Index n = 16;
  Eigen::Index dx = 8;
  Eigen::Index dy = 8;
  double L = 1.0;
  double mu_x = 0.1;
  double mu_y = 0.1;
  double linear_scale = 1.0;
  std::uint64_t seed = 0;
};

class QuadraticProblem : public Problem {
 public:
  // Explicit construction from per-component matrices; used by tests and the
  // hand-built benchmark instances.
  QuadraticProblem(std::vector<Matrix> A, std::vector<Matrix> B, std::vector<Matrix> C,
                   std::vector<Vector> a, std::vector<Vector> c,
                   ProblemConstants constants, PrimalDualSet sets);

  static std::shared_ptr<QuadraticProblem> generate(const QuadraticConfig &cfg);

  double value(const PrimalDualPoint &z) const override;
  double component_value(Eigen::Index i, const PrimalDualPoint &z) const override;
  void component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                          GradientPair &out) const override;
  void full_gradient(const PrimalDualPoint &z, GradientPair &out) const override;

  bool has_known_saddle() const override;
  PrimalDualPoint known_saddle() const override;

  // Exact primal-dual gap max_y f(x,y) - min_x f(x,y) via the two first-order
  // optimality systems; requires unconstrained x and y.
  double duality_gap(const PrimalDualPoint &z) const;

  // True average-smoothness constant sqrt(lambda_max((1/n) sum M_i'M_i)).
  double exact_average_smoothness() const;

  const Matrix &mean_A() const { return A_bar_; }
  const Matrix &mean_B() const { return B_bar_; }
  const Matrix &mean_C() const { return C_bar_; }

 private:
  void solve_saddle() const;

  std::vector<Matrix> A_, B_, C_;
  std::vector<Vector> a_, c_;
  Matrix A_bar_, B_bar_, C_bar_;
  Vector a_bar_, c_bar_;
  mutable bool saddle_ready_ = false;
  mutable PrimalDualPoint saddle_;
};

}  // namespace minimax

#endif

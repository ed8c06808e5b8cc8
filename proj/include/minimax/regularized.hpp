#ifndef MINIMAX_REGULARIZED_HPP
#define MINIMAX_REGULARIZED_HPP

#include <memory>

#include "minimax/problem.hpp"

namespace minimax {

// Quadratic perturbation of an inner finite-sum problem:
//   f_i(z) + wx ||x - x0||^2 - wy ||y - y0||^2.
// Used to lift merely convex(-concave) problems into strongly-convex-
// strongly-concave ones at an O(eps) objective cost.
class RegularizedProblem : public Problem {
 public:
  RegularizedProblem(ProblemPtr inner, double wx, double wy, Vector x0, Vector y0,
                     ProblemConstants constants);

  double value(const PrimalDualPoint &z) const override;
  double component_value(Eigen::Index i, const PrimalDualPoint &z) const override;
  void component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                          GradientPair &out) const override;
  void full_gradient(const PrimalDualPoint &z, GradientPair &out) const override;

  const Problem &inner() const { return *inner_; }
  double weight_x() const { return wx_; }
  double weight_y() const { return wy_; }
  const Vector &anchor_x() const { return x0_; }
  const Vector &anchor_y() const { return y0_; }

 private:
  ProblemPtr inner_;
  double wx_, wy_;
  Vector x0_, y0_;
};

// Lift of a convex/strongly-concave problem: adds (eps / 4 Dx^2)||x - x0||^2,
// making the primal side (eps / 4 Dx^2)-strongly convex while changing the
// objective by at most eps/4 on the feasible sets. Requires eps <= 4 L Dx^2.
std::shared_ptr<RegularizedProblem> wrap_strongly_concave(ProblemPtr inner, double eps,
                                                          double Dx, Vector x0);

// Two-sided lift for merely convex-concave problems: adds
// (eps / 8 Dx^2)||x - x0||^2 - (eps / 8 Dy^2)||y - y0||^2.
// Requires eps <= 4 L min(Dx^2, Dy^2); objective changes by at most eps/4.
std::shared_ptr<RegularizedProblem> wrap_both(ProblemPtr inner, double eps, double Dx,
                                              double Dy, Vector x0, Vector y0);

// Proximal shift used by the accelerated outer loop: f + (beta/2)||x - u||^2.
// Declared constants: L + beta and mu_x + beta.
std::shared_ptr<RegularizedProblem> proximal_shift(ProblemPtr inner, double beta,
                                                   Vector u);

// Role-swapped view: g(x~, y~) = -f(y~, x~). Swaps the primal and dual sides
// so solvers can assume mu_y <= mu_x without loss of generality.
class TransposedProblem : public Problem {
 public:
  explicit TransposedProblem(ProblemPtr inner);

  double value(const PrimalDualPoint &z) const override;
  double component_value(Eigen::Index i, const PrimalDualPoint &z) const override;
  void component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                          GradientPair &out) const override;
  void full_gradient(const PrimalDualPoint &z, GradientPair &out) const override;
  bool has_known_saddle() const override { return inner_->has_known_saddle(); }
  PrimalDualPoint known_saddle() const override;

  static PrimalDualPoint swap(const PrimalDualPoint &z) { return {z.y, z.x}; }

 private:
  ProblemPtr inner_;
};

}  // namespace minimax

#endif

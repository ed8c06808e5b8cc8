#ifndef MINIMAX_WIRELESS_HPP
#define MINIMAX_WIRELESS_HPP

#include <cstdint>
#include <memory>

#include "minimax/problem.hpp"

namespace minimax {

// Power-allocation game over n channels:
//   f(x, y) = -(1/n) sum_i log(1 + b_i x_i / (a_i + y_i)),
// with x in the nonnegative ball of radius R and y on the scaled simplex
// {y >= 0, sum y = n}. Component i touches only the coordinate pair
// (x_i, y_i), so per-component gradients are 2-sparse.
class WirelessProblem : public Problem {
 public:
  static std::shared_ptr<WirelessProblem> make(Vector a, Vector b, double R);
  // a ~ Uniform[lo, hi]^n, b = 1; deterministic per seed.
  static std::shared_ptr<WirelessProblem> generate(Eigen::Index n, double R, double lo,
                                                   double hi, std::uint64_t seed);

  double value(const PrimalDualPoint &z) const override;
  double component_value(Eigen::Index i, const PrimalDualPoint &z) const override;
  void component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                          GradientPair &out) const override;
  void full_gradient(const PrimalDualPoint &z, GradientPair &out) const override;
  bool component_gradient_sparse(Eigen::Index i, const PrimalDualPoint &z,
                                 std::vector<SparseTriple> &out) const override;

  const Vector &channel_noise() const { return a_; }
  const Vector &channel_gain() const { return b_; }

 private:
  WirelessProblem(Vector a, Vector b, double R);
  // (d/dx_i, d/dy_i) of f_i = -log(1 + b_i x_i / (a_i + y_i))
  void pair_gradient(Eigen::Index i, double xi, double yi, double &gx,
                     double &gy) const;

  Vector a_, b_;
};

}  // namespace minimax

#endif

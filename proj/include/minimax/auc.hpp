#ifndef MINIMAX_AUC_HPP
#define MINIMAX_AUC_HPP

#include <memory>
#include <vector>

#include "minimax/problem.hpp"
#include "minimax/rows.hpp"

namespace minimax {

// Saddle-point reformulation of regularized AUC maximization. The primal
// variable is x = [theta; u; v] in R^{d+2}, the dual y is scalar:
//   f_i(x, y) = (lambda/2)||x||^2 - p(1-p) y^2
//             + p       ((theta'a_i - v)^2 + 2(1+y) theta'a_i)   if b_i = -1
//             + (1-p)   ((theta'a_i - u)^2 - 2(1+y) theta'a_i)   if b_i = +1
// where p is the positive-label fraction. Declared moduli: mu_x = lambda,
// mu_y = 2 p (1-p); L is estimated at construction (the objective is
// quadratic, so the pairwise estimator is scale-free).
class AucProblem : public Problem {
 public:
  static std::shared_ptr<AucProblem> make(std::vector<LabeledSparseRow> rows,
                                          double lambda);

  double value(const PrimalDualPoint &z) const override;
  double component_value(Eigen::Index i, const PrimalDualPoint &z) const override;
  void component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                          GradientPair &out) const override;

  double p_hat() const { return p_hat_; }
  double lambda() const { return lambda_; }
  Eigen::Index feature_dim() const { return d_; }

 private:
  AucProblem(std::vector<LabeledSparseRow> rows, double lambda, Eigen::Index d,
             double p_hat);

  std::vector<LabeledSparseRow> rows_;
  double lambda_;
  Eigen::Index d_;
  double p_hat_;
};

}  // namespace minimax

#endif

#ifndef MINIMAX_LOWERBOUND_HPP
#define MINIMAX_LOWERBOUND_HPP

#include <memory>
#include <string>
#include <vector>

#include "minimax/problem.hpp"

namespace minimax {

// Adversarial chain construction with a closed-form saddle point. One block is
//   H(x, y) = (alpha/2)||x||^2 + x'(B y - c) - (alpha/2)||y||^2
// on R^d with B bidiagonal (ones on the diagonal, -1 on the subdiagonal, last
// diagonal entry sqrt(alpha*omega)) and c = (omega, 0, ..., 0). The finite sum
// composes n independent blocks: f_i(x, y) = lambda * H(block_i(x), block_i(y)),
// so the full problem lives on R^{nd} x R^{nd}. Component queries can extend an
// iterate's nonzero prefix in their own block by at most one coordinate, which
// is what makes the instance hard for any SFO method.
class HardChainInstance : public Problem {
 public:
  // Direct parameterization; used by unit tests.
  static std::shared_ptr<HardChainInstance> make(double alpha_h, double lambda_h,
                                                 Eigen::Index d, Eigen::Index n);
  // Instance calibrated to be (mu, mu)-convex-concave and L-average-smooth
  // with a saddle at squared distance > epsilon from anything reachable in
  // n*d/2 queries. Requires L/mu > sqrt(10 n) and epsilon < 0.5*exp(-5).
  static std::shared_ptr<HardChainInstance> build(double L, double mu, Eigen::Index n,
                                                  double epsilon);

  double value(const PrimalDualPoint &z) const override;
  double component_value(Eigen::Index i, const PrimalDualPoint &z) const override;
  void component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                          GradientPair &out) const override;
  void full_gradient(const PrimalDualPoint &z, GradientPair &out) const override;
  bool has_known_saddle() const override { return true; }
  PrimalDualPoint known_saddle() const override;

  double alpha_h() const { return alpha_; }
  double lambda_h() const { return lambda_; }
  double omega() const { return omega_; }
  double q_h() const { return q_; }
  Eigen::Index block_dim() const { return d_; }

 private:
  HardChainInstance(double alpha_h, double lambda_h, Eigen::Index d, Eigen::Index n);
  // per-block pieces of the gradient operator of lambda * H
  void block_gradient(const double *x, const double *y, double *gx,
                      double *gy_neg) const;

  double alpha_, lambda_, omega_, q_;
  Eigen::Index d_;
};

// Coordinate-separable hard instance:
//   f_i(x, y) = (mu/2)||x||^2 + (sqrt(n) Lh / 2)(x_i - 1)^2
//             - (mu/2)||y||^2 - (sqrt(n) Lh / 2)(y_i - 1)^2
// with Lh = sqrt(L^2/2 - mu^2); saddle at x* = y* = (Lh/(Lh + sqrt(n) mu)) 1.
class SeparableHardInstance : public Problem {
 public:
  // Requires L/mu > 2.
  static std::shared_ptr<SeparableHardInstance> build(double L, double mu,
                                                      Eigen::Index n);

  double value(const PrimalDualPoint &z) const override;
  double component_value(Eigen::Index i, const PrimalDualPoint &z) const override;
  void component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                          GradientPair &out) const override;
  void full_gradient(const PrimalDualPoint &z, GradientPair &out) const override;
  bool has_known_saddle() const override { return true; }
  PrimalDualPoint known_saddle() const override;

  double mu() const { return mu_; }
  double L_hat() const { return L_hat_; }
  // per-component smoothness bound mu + sqrt(n) * L_hat
  double component_smoothness() const;

 private:
  SeparableHardInstance(double mu, double L_hat, Eigen::Index n,
                        ProblemConstants constants);

  double mu_, L_hat_;
};

// One oracle query in an audited run: the point handed to the oracle and the
// component drawn (-1 for a full-gradient evaluation, which touches every
// block).
struct ZeroChainStep {
  PrimalDualPoint z;
  Eigen::Index component = -1;
};

struct ZeroChainReport {
  bool pass = true;
  long long first_violation_step = -1;
  Eigen::Index block = -1;
  std::string message = "pass";
};

// Replays a query trace from the origin and checks that the nonzero prefix of
// every block of every queried point never exceeds the number of times that
// block's component has been drawn. Throws if z0 is not the origin.
ZeroChainReport zero_chain_audit(const HardChainInstance &inst,
                                 const PrimalDualPoint &z0,
                                 const std::vector<ZeroChainStep> &steps);

// Problem decorator that records every oracle query so a solver run can be
// audited afterwards.
class RecordingProblem : public Problem {
 public:
  explicit RecordingProblem(ProblemPtr inner);

  double value(const PrimalDualPoint &z) const override;
  double component_value(Eigen::Index i, const PrimalDualPoint &z) const override;
  void component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                          GradientPair &out) const override;
  void full_gradient(const PrimalDualPoint &z, GradientPair &out) const override;

  const std::vector<ZeroChainStep> &queries() const { return queries_; }

 private:
  ProblemPtr inner_;
  mutable std::vector<ZeroChainStep> queries_;
};

}  // namespace minimax

#endif

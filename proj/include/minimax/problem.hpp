#ifndef MINIMAX_PROBLEM_HPP
#define MINIMAX_PROBLEM_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "minimax/projections.hpp"
#include "minimax/types.hpp"

namespace minimax {

// Declared constants of a finite-sum minimax problem: component count n,
// average-smoothness L and the convexity/concavity moduli.
struct ProblemConstants {
  Eigen::Index n = 0;
  double L = 0.0;
  double mu_x = 0.0;
  double mu_y = 0.0;

  double kappa_x() const {
    return mu_x > 0.0 ? L / mu_x : std::numeric_limits<double>::infinity();
  }
  double kappa_y() const {
    return mu_y > 0.0 ? L / mu_y : std::numeric_limits<double>::infinity();
  }

  void validate() const {
    if (n < 1) throw UsageError("constants: n must be >= 1");
    if (!(L > 0.0)) throw UsageError("constants: L must be positive");
    if (mu_x < 0.0 || mu_y < 0.0) throw UsageError("constants: moduli must be >= 0");
  }
};

// Sparse gradient increment: (block, index, value) triples where block 0 is
// the x-gradient and block 1 the negated y-gradient.
struct SparseTriple {
  int block;  // 0 = gx, 1 = gy_negated
  Eigen::Index index;
  double value;
};

// Immutable finite-sum minimax problem f = (1/n) sum f_i. Components expose
// the operator convention (grad_x f_i, -grad_y f_i).
class Problem {
 public:
  virtual ~Problem() = default;

  Eigen::Index dx() const { return dx_; }
  Eigen::Index dy() const { return dy_; }
  const ProblemConstants &constants() const { return constants_; }
  const PrimalDualSet &sets() const { return sets_; }
  Eigen::Index num_components() const { return constants_.n; }

  // f(z); used by oracles, metrics and the regularization wrappers.
  virtual double value(const PrimalDualPoint &z) const = 0;

  // f_i(z) for 0-based component i.
  virtual double component_value(Eigen::Index i, const PrimalDualPoint &z) const = 0;

  // g_i(z) = (grad_x f_i, -grad_y f_i); out must be sized (dx, dy).
  virtual void component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                                  GradientPair &out) const = 0;

  // g(z); default averages the components, families with structure override.
  virtual void full_gradient(const PrimalDualPoint &z, GradientPair &out) const;

  // Optional sparse channel: returns false when the family is dense.
  virtual bool component_gradient_sparse(Eigen::Index i, const PrimalDualPoint &z,
                                         std::vector<SparseTriple> &out) const {
    (void)i;
    (void)z;
    (void)out;
    return false;
  }

  // Closed-form saddle point when the family knows one.
  virtual bool has_known_saddle() const { return false; }
  virtual PrimalDualPoint known_saddle() const {
    throw UsageError("problem has no closed-form saddle");
  }

  void check_dims(const PrimalDualPoint &z) const {
    if (z.x.size() != dx_ || z.y.size() != dy_)
      throw UsageError("point dimensions do not match problem");
  }
  void check_component(Eigen::Index i) const {
    if (i < 0 || i >= constants_.n) throw UsageError("component index out of range");
  }

 protected:
  Problem(Eigen::Index dx, Eigen::Index dy, ProblemConstants constants,
          PrimalDualSet sets)
      : dx_(dx), dy_(dy), constants_(constants), sets_(std::move(sets)) {
    if (dx < 1 || dy < 1) throw UsageError("problem dimensions must be >= 1");
    constants_.validate();
  }

  Eigen::Index dx_, dy_;
  ProblemConstants constants_;
  PrimalDualSet sets_;
};

using ProblemPtr = std::shared_ptr<const Problem>;

// Per-run SFO accounting (one component gradient = 1 call, a full gradient
// = n calls). Solvers own one counter per run; metrics use a separate one.
class Oracle {
 public:
  explicit Oracle(const Problem &p) : p_(p) {}

  void full_gradient(const PrimalDualPoint &z, GradientPair &out) {
    p_.check_dims(z);
    p_.full_gradient(z, out);
    sfo_ += p_.num_components();
    check(out);
  }

  void component_gradient(Eigen::Index i, const PrimalDualPoint &z, GradientPair &out) {
    p_.check_dims(z);
    p_.check_component(i);
    p_.component_gradient(i, z, out);
    sfo_ += 1;
    check(out);
  }

  long long sfo_calls() const { return sfo_; }
  const Problem &problem() const { return p_; }

 private:
  static void check(const GradientPair &g) {
    if (!g.all_finite()) throw NumericError("gradient produced NaN/Inf");
  }
  const Problem &p_;
  long long sfo_ = 0;
};

// Free-function forms of the Definition-style gradient operators.
GradientPair gradient_operator(const Problem &p, const PrimalDualPoint &z);
GradientPair stochastic_gradient_operator(const Problem &p, Eigen::Index i,
                                          const PrimalDualPoint &z);

// Monte-Carlo lower estimate of the average-smoothness constant:
// max over sampled pairs of sqrt((1/n) sum_i ||g_i(z)-g_i(z')||^2 / ||z-z'||^2),
// with samples projected onto the feasible sets. Deterministic per seed.
double estimate_average_smoothness(const Problem &p, int num_pairs, double radius,
                                   std::uint64_t seed);

}  // namespace minimax

#endif

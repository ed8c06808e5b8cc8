#ifndef MINIMAX_METRICS_HPP
#define MINIMAX_METRICS_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "minimax/problem.hpp"
#include "minimax/quadratic.hpp"

namespace minimax {

double distance_to_saddle_squared(const PrimalDualPoint &z, const PrimalDualPoint &z_star);

// Full-gradient Euclidean norm ||g(z)||; costs n SFO.
double gradient_norm(const Problem &p, const PrimalDualPoint &z);

// ( ||x - P_X(x - t gx)|| + ||y - P_Y(y + t gy)|| ) / t with t = tau_hat;
// reduces to ||gx|| + ||gy|| on unconstrained sets. Costs n SFO.
double gradient_mapping_norm(const Problem &p, const PrimalDualPoint &z, double tau_hat);

// Exact primal-dual gap for unconstrained quadratics.
double duality_gap_quadratic(const QuadraticProblem &p, const PrimalDualPoint &z);

// Named measurements evaluated at trace checkpoints. Their oracle cost is
// charged to a separate measurement counter so the run's own SFO count stays
// comparable across solvers.
class MetricSet {
 public:
  using Fn = std::function<double(const PrimalDualPoint &)>;

  void add(std::string name, long long sfo_cost, Fn fn);
  const std::vector<std::string> &names() const { return names_; }
  std::size_t size() const { return fns_.size(); }
  std::vector<double> evaluate(const PrimalDualPoint &z) const;
  long long measurement_sfo() const { return measurement_sfo_; }

  static MetricSet dist_to_saddle(PrimalDualPoint z_star);
  static MetricSet grad_norm(const ProblemPtr &p);
  static MetricSet grad_mapping(const ProblemPtr &p, double tau_hat);
  static MetricSet gap_quadratic(const std::shared_ptr<const QuadraticProblem> &p);
  MetricSet &merge(MetricSet other);
  // Same metrics evaluated with the (x, y) blocks swapped; used when a solver
  // runs on a role-swapped view of the problem.
  MetricSet transposed() const;

 private:
  std::vector<std::string> names_;
  std::vector<long long> costs_;
  std::vector<Fn> fns_;
  mutable long long measurement_sfo_ = 0;
};

}  // namespace minimax

#endif

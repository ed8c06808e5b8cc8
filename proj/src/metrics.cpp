#include "minimax/metrics.hpp"

namespace minimax {

double distance_to_saddle_squared(const PrimalDualPoint &z,
                                  const PrimalDualPoint &z_star) {
  if (z.x.size() != z_star.x.size() || z.y.size() != z_star.y.size())
    throw UsageError("distance: dimension mismatch");
  return (z - z_star).squared_norm();
}

double gradient_norm(const Problem &p, const PrimalDualPoint &z) {
  return gradient_operator(p, z).norm();
}

double gradient_mapping_norm(const Problem &p, const PrimalDualPoint &z,
                             double tau_hat) {
  if (!(tau_hat > 0.0)) throw UsageError("gradient mapping: tau_hat must be positive");
  const GradientPair g = gradient_operator(p, z);
  // gy_negated = -grad_y f, so the ascent step y + t grad_y = y - t gy_negated
  const Vector px = p.sets().x_set.project(z.x - tau_hat * g.gx);
  const Vector py = p.sets().y_set.project(z.y - tau_hat * g.gy_negated);
  return ((z.x - px).norm() + (z.y - py).norm()) / tau_hat;
}

double duality_gap_quadratic(const QuadraticProblem &p, const PrimalDualPoint &z) {
  return p.duality_gap(z);
}

void MetricSet::add(std::string name, long long sfo_cost, Fn fn) {
  names_.push_back(std::move(name));
  costs_.push_back(sfo_cost);
  fns_.push_back(std::move(fn));
}

std::vector<double> MetricSet::evaluate(const PrimalDualPoint &z) const {
  std::vector<double> out(fns_.size());
  for (std::size_t i = 0; i < fns_.size(); ++i) {
    out[i] = fns_[i](z);
    measurement_sfo_ += costs_[i];
  }
  return out;
}

MetricSet MetricSet::dist_to_saddle(PrimalDualPoint z_star) {
  MetricSet m;
  m.add("dist_sq", 0, [z_star = std::move(z_star)](const PrimalDualPoint &z) {
    return distance_to_saddle_squared(z, z_star);
  });
  return m;
}

MetricSet MetricSet::grad_norm(const ProblemPtr &p) {
  MetricSet m;
  m.add("grad_norm", p->num_components(),
        [p](const PrimalDualPoint &z) { return gradient_norm(*p, z); });
  return m;
}

MetricSet MetricSet::grad_mapping(const ProblemPtr &p, double tau_hat) {
  MetricSet m;
  m.add("grad_mapping", p->num_components(), [p, tau_hat](const PrimalDualPoint &z) {
    return gradient_mapping_norm(*p, z, tau_hat);
  });
  return m;
}

MetricSet MetricSet::gap_quadratic(const std::shared_ptr<const QuadraticProblem> &p) {
  MetricSet m;
  m.add("duality_gap", 0,
        [p](const PrimalDualPoint &z) { return p->duality_gap(z); });
  return m;
}

MetricSet &MetricSet::merge(MetricSet other) {
  for (std::size_t i = 0; i < other.fns_.size(); ++i) {
    names_.push_back(std::move(other.names_[i]));
    costs_.push_back(other.costs_[i]);
    fns_.push_back(std::move(other.fns_[i]));
  }
  return *this;
}

MetricSet MetricSet::transposed() const {
  MetricSet m;
  m.names_ = names_;
  m.costs_ = costs_;
  for (const auto &fn : fns_)
    m.fns_.push_back(
        [fn](const PrimalDualPoint &z) { return fn(PrimalDualPoint{z.y, z.x}); });
  return m;
}

}  // namespace minimax

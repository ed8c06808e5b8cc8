#include "minimax/problem.hpp"

#include "minimax/rng.hpp"

namespace minimax {

void Problem::full_gradient(const PrimalDualPoint &z, GradientPair &out) const {
  GradientPair gi(dx_, dy_);
  out.gx = Vector::Zero(dx_);
  out.gy_negated = Vector::Zero(dy_);
  for (Eigen::Index i = 0; i < constants_.n; ++i) {
    component_gradient(i, z, gi);
    out.gx += gi.gx;
    out.gy_negated += gi.gy_negated;
  }
  const double inv_n = 1.0 / static_cast<double>(constants_.n);
  out.gx *= inv_n;
  out.gy_negated *= inv_n;
}

GradientPair gradient_operator(const Problem &p, const PrimalDualPoint &z) {
  p.check_dims(z);
  GradientPair g(p.dx(), p.dy());
  p.full_gradient(z, g);
  return g;
}

GradientPair stochastic_gradient_operator(const Problem &p, Eigen::Index i,
                                          const PrimalDualPoint &z) {
  p.check_dims(z);
  p.check_component(i);
  GradientPair g(p.dx(), p.dy());
  p.component_gradient(i, z, g);
  return g;
}

double estimate_average_smoothness(const Problem &p, int num_pairs, double radius,
                                   std::uint64_t seed) {
  if (num_pairs < 1) throw UsageError("smoothness estimate: need >= 1 pair");
  if (!(radius > 0.0)) throw UsageError("smoothness estimate: radius must be positive");
  Rng rng(seed);
  const Eigen::Index dx = p.dx(), dy = p.dy(), n = p.num_components();
  GradientPair ga(dx, dy), gb(dx, dy);
  double best = 0.0;
  for (int t = 0; t < num_pairs; ++t) {
    PrimalDualPoint a{Vector(dx), Vector(dy)};
    PrimalDualPoint b{Vector(dx), Vector(dy)};
    for (Eigen::Index j = 0; j < dx; ++j) a.x[j] = radius * rng.normal();
    for (Eigen::Index j = 0; j < dy; ++j) a.y[j] = radius * rng.normal();
    for (Eigen::Index j = 0; j < dx; ++j) b.x[j] = radius * rng.normal();
    for (Eigen::Index j = 0; j < dy; ++j) b.y[j] = radius * rng.normal();
    a = p.sets().project(a);
    b = p.sets().project(b);
    const double dist2 = (a - b).squared_norm();
    if (dist2 <= 1e-24) continue;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      p.component_gradient(i, a, ga);
      p.component_gradient(i, b, gb);
      acc += (ga.gx - gb.gx).squaredNorm() + (ga.gy_negated - gb.gy_negated).squaredNorm();
    }
    best = std::max(best, std::sqrt(acc / (static_cast<double>(n) * dist2)));
  }
  return best;
}

}  // namespace minimax

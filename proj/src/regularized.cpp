#include "minimax/regularized.hpp"

namespace minimax {

RegularizedProblem::RegularizedProblem(ProblemPtr inner, double wx, double wy,
                                       Vector x0, Vector y0,
                                       ProblemConstants constants)
    : Problem(inner->dx(), inner->dy(), constants, inner->sets()),
      inner_(std::move(inner)),
      wx_(wx),
      wy_(wy),
      x0_(std::move(x0)),
      y0_(std::move(y0)) {
  if (wx_ < 0.0 || wy_ < 0.0) throw UsageError("regularized: weights must be >= 0");
  if (x0_.size() != dx_ || y0_.size() != dy_)
    throw UsageError("regularized: anchor dimension mismatch");
}

double RegularizedProblem::value(const PrimalDualPoint &z) const {
  check_dims(z);
  return inner_->value(z) + wx_ * (z.x - x0_).squaredNorm() -
         wy_ * (z.y - y0_).squaredNorm();
}

double RegularizedProblem::component_value(Eigen::Index i,
                                           const PrimalDualPoint &z) const {
  check_dims(z);
  return inner_->component_value(i, z) + wx_ * (z.x - x0_).squaredNorm() -
         wy_ * (z.y - y0_).squaredNorm();
}

void RegularizedProblem::component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                                            GradientPair &out) const {
  inner_->component_gradient(i, z, out);
  if (wx_ > 0.0) out.gx += (2.0 * wx_) * (z.x - x0_);
  if (wy_ > 0.0) out.gy_negated += (2.0 * wy_) * (z.y - y0_);
}

void RegularizedProblem::full_gradient(const PrimalDualPoint &z,
                                       GradientPair &out) const {
  inner_->full_gradient(z, out);
  if (wx_ > 0.0) out.gx += (2.0 * wx_) * (z.x - x0_);
  if (wy_ > 0.0) out.gy_negated += (2.0 * wy_) * (z.y - y0_);
}

std::shared_ptr<RegularizedProblem> wrap_strongly_concave(ProblemPtr inner, double eps,
                                                          double Dx, Vector x0) {
  if (!(eps > 0.0)) throw UsageError("wrap: eps must be positive");
  if (!(Dx > 0.0) || !std::isfinite(Dx))
    throw UsageError("wrap: Dx must be positive and finite");
  const double L = inner->constants().L;
  if (eps > 4.0 * L * Dx * Dx)
    throw UsageError("wrap: accuracy transfer requires eps <= 4*L*Dx^2");
  if (!(inner->constants().mu_y > 0.0))
    throw UsageError("wrap: one-sided lift needs a strongly concave inner problem");
  const double w = eps / (4.0 * Dx * Dx);
  ProblemConstants c = inner->constants();
  c.L = 2.0 * L;
  c.mu_x = w;
  Vector y0 = Vector::Zero(inner->dy());
  return std::make_shared<RegularizedProblem>(std::move(inner), w, 0.0, std::move(x0),
                                              std::move(y0), c);
}

std::shared_ptr<RegularizedProblem> wrap_both(ProblemPtr inner, double eps, double Dx,
                                              double Dy, Vector x0, Vector y0) {
  if (!(eps > 0.0)) throw UsageError("wrap: eps must be positive");
  if (!(Dx > 0.0) || !std::isfinite(Dx) || !(Dy > 0.0) || !std::isfinite(Dy))
    throw UsageError("wrap: diameters must be positive and finite");
  const double L = inner->constants().L;
  if (eps > 4.0 * L * std::min(Dx * Dx, Dy * Dy))
    throw UsageError("wrap: accuracy transfer requires eps <= 4*L*min(Dx^2, Dy^2)");
  const double wx = eps / (8.0 * Dx * Dx);
  const double wy = eps / (8.0 * Dy * Dy);
  ProblemConstants c = inner->constants();
  c.L = 2.0 * L;
  c.mu_x = wx;
  c.mu_y = wy;
  return std::make_shared<RegularizedProblem>(std::move(inner), wx, wy, std::move(x0),
                                              std::move(y0), c);
}

std::shared_ptr<RegularizedProblem> proximal_shift(ProblemPtr inner, double beta,
                                                   Vector u) {
  if (!(beta >= 0.0)) throw UsageError("proximal shift: beta must be >= 0");
  ProblemConstants c = inner->constants();
  c.L = inner->constants().L + beta;
  c.mu_x = inner->constants().mu_x + beta;
  Vector y0 = Vector::Zero(inner->dy());
  return std::make_shared<RegularizedProblem>(std::move(inner), 0.5 * beta, 0.0,
                                              std::move(u), std::move(y0), c);
}

TransposedProblem::TransposedProblem(ProblemPtr inner)
    : Problem(inner->dy(), inner->dx(),
              [&] {
                ProblemConstants c = inner->constants();
                std::swap(c.mu_x, c.mu_y);
                return c;
              }(),
              PrimalDualSet{inner->sets().y_set, inner->sets().x_set}),
      inner_(std::move(inner)) {}

double TransposedProblem::value(const PrimalDualPoint &z) const {
  check_dims(z);
  return -inner_->value(swap(z));
}

double TransposedProblem::component_value(Eigen::Index i,
                                          const PrimalDualPoint &z) const {
  check_dims(z);
  return -inner_->component_value(i, swap(z));
}

void TransposedProblem::component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                                           GradientPair &out) const {
  GradientPair g(inner_->dx(), inner_->dy());
  inner_->component_gradient(i, swap(z), g);
  // grad_x(-f(y~, x~)) = -grad_y f = gy_negated; -grad_y(-f) = grad_x f = gx
  out.gx = g.gy_negated;
  out.gy_negated = g.gx;
}

void TransposedProblem::full_gradient(const PrimalDualPoint &z,
                                      GradientPair &out) const {
  GradientPair g(inner_->dx(), inner_->dy());
  inner_->full_gradient(swap(z), g);
  out.gx = g.gy_negated;
  out.gy_negated = g.gx;
}

PrimalDualPoint TransposedProblem::known_saddle() const {
  return swap(inner_->known_saddle());
}

}  // namespace minimax

#include "minimax/lowerbound.hpp"

#include <cmath>

namespace minimax {

namespace {

ProblemConstants chain_constants(double alpha_h, double lambda_h, Eigen::Index n) {
  ProblemConstants c;
  c.n = n;
  const double nn = static_cast<double>(n);
  c.L = lambda_h * std::sqrt((8.0 + 2.0 * alpha_h * alpha_h) / nn);
  c.mu_x = lambda_h * alpha_h / nn;
  c.mu_y = c.mu_x;
  return c;
}

}  // namespace

HardChainInstance::HardChainInstance(double alpha_h, double lambda_h, Eigen::Index d,
                                     Eigen::Index n)
    : Problem(n * d, n * d, chain_constants(alpha_h, lambda_h, n),
              PrimalDualSet{FeasibleSet::whole_space(), FeasibleSet::whole_space()}),
      alpha_(alpha_h),
      lambda_(lambda_h),
      d_(d) {
  const double root = std::sqrt(alpha_ * alpha_ + 4.0);
  omega_ = (root - alpha_) / 2.0;
  q_ = (2.0 + alpha_ * alpha_ - alpha_ * root) / 2.0;
}

std::shared_ptr<HardChainInstance> HardChainInstance::make(double alpha_h,
                                                           double lambda_h,
                                                           Eigen::Index d,
                                                           Eigen::Index n) {
  if (!(alpha_h > 0.0)) throw UsageError("hard chain: alpha must be positive");
  if (!(lambda_h > 0.0)) throw UsageError("hard chain: lambda must be positive");
  if (d < 1 || n < 1) throw UsageError("hard chain: d and n must be >= 1");
  return std::shared_ptr<HardChainInstance>(
      new HardChainInstance(alpha_h, lambda_h, d, n));
}

std::shared_ptr<HardChainInstance> HardChainInstance::build(double L, double mu,
                                                            Eigen::Index n,
                                                            double epsilon) {
  if (!(mu > 0.0) || !(L > 0.0)) throw UsageError("hard chain: L, mu must be positive");
  const double nn = static_cast<double>(n);
  const double ratio = L / mu;
  if (!(ratio > std::sqrt(10.0 * nn)))
    throw UsageError("hard chain: construction requires L/mu > sqrt(10 n)");
  if (!(epsilon > 0.0) || !(epsilon < 0.5 * std::exp(-5.0)))
    throw UsageError("hard chain: construction requires epsilon < exp(-5)/2");
  const double alpha = std::sqrt(8.0 * nn / (ratio * ratio - 2.0 * nn));
  const double lambda = nn * mu / alpha;
  const auto d = static_cast<Eigen::Index>(
      std::floor(std::log(1.0 / (2.0 * epsilon)) / alpha)) - 4;
  if (d < 1) throw NumericError("hard chain: derived block dimension < 1");
  return make(alpha, lambda, d, n);
}

// gradient operator of lambda*H on one block: gx = lambda(alpha x + B y - c),
// gy_neg = lambda(alpha y - B'x); B applied in O(d)
void HardChainInstance::block_gradient(const double *x, const double *y, double *gx,
                                       double *gy_neg) const {
  const double tail = std::sqrt(alpha_ * omega_);
  for (Eigen::Index j = 0; j < d_; ++j) {
    double By = (j + 1 == d_) ? tail * y[j] : y[j];
    if (j > 0) By -= y[j - 1];
    double Btx = (j + 1 == d_) ? tail * x[j] : x[j] - x[j + 1];
    gx[j] = lambda_ * (alpha_ * x[j] + By);
    gy_neg[j] = lambda_ * (alpha_ * y[j] - Btx);
  }
  gx[0] -= lambda_ * omega_;
}

double HardChainInstance::component_value(Eigen::Index i,
                                          const PrimalDualPoint &z) const {
  check_component(i);
  check_dims(z);
  const double tail = std::sqrt(alpha_ * omega_);
  const double *x = z.x.data() + i * d_;
  const double *y = z.y.data() + i * d_;
  double quad = 0.0, cross = 0.0;
  for (Eigen::Index j = 0; j < d_; ++j) {
    quad += x[j] * x[j] - y[j] * y[j];
    double By = (j + 1 == d_) ? tail * y[j] : y[j];
    if (j > 0) By -= y[j - 1];
    cross += x[j] * By;
  }
  cross -= x[0] * omega_;
  return lambda_ * (0.5 * alpha_ * quad + cross);
}

double HardChainInstance::value(const PrimalDualPoint &z) const {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < constants_.n; ++i) acc += component_value(i, z);
  return acc / static_cast<double>(constants_.n);
}

void HardChainInstance::component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                                           GradientPair &out) const {
  out.gx.setZero();
  out.gy_negated.setZero();
  block_gradient(z.x.data() + i * d_, z.y.data() + i * d_, out.gx.data() + i * d_,
                 out.gy_negated.data() + i * d_);
}

void HardChainInstance::full_gradient(const PrimalDualPoint &z,
                                      GradientPair &out) const {
  out.gx.resize(dx_);
  out.gy_negated.resize(dy_);
  for (Eigen::Index i = 0; i < constants_.n; ++i)
    block_gradient(z.x.data() + i * d_, z.y.data() + i * d_, out.gx.data() + i * d_,
                   out.gy_negated.data() + i * d_);
  out.gx /= static_cast<double>(constants_.n);
  out.gy_negated /= static_cast<double>(constants_.n);
}

PrimalDualPoint HardChainInstance::known_saddle() const {
  Vector bx(d_), by(d_);
  double qpow = 1.0;
  for (Eigen::Index j = 0; j < d_; ++j) {
    qpow *= q_;
    bx[j] = qpow;
    by[j] = omega_ * qpow;
  }
  by[d_ - 1] = omega_ * qpow / std::sqrt(1.0 - q_);
  PrimalDualPoint z = PrimalDualPoint::Zero(dx_, dy_);
  for (Eigen::Index i = 0; i < constants_.n; ++i) {
    z.x.segment(i * d_, d_) = bx;
    z.y.segment(i * d_, d_) = by;
  }
  return z;
}

SeparableHardInstance::SeparableHardInstance(double mu, double L_hat, Eigen::Index n,
                                             ProblemConstants constants)
    : Problem(n, n, constants,
              PrimalDualSet{FeasibleSet::whole_space(), FeasibleSet::whole_space()}),
      mu_(mu),
      L_hat_(L_hat) {}

std::shared_ptr<SeparableHardInstance> SeparableHardInstance::build(double L, double mu,
                                                                    Eigen::Index n) {
  if (!(mu > 0.0) || !(L > 0.0))
    throw UsageError("separable instance: L, mu must be positive");
  if (n < 1) throw UsageError("separable instance: n must be >= 1");
  if (!(L / mu > 2.0)) throw UsageError("separable instance: requires L/mu > 2");
  const double L_hat = std::sqrt(L * L / 2.0 - mu * mu);
  ProblemConstants c;
  c.n = n;
  c.L = L;
  c.mu_x = mu;
  c.mu_y = mu;
  return std::shared_ptr<SeparableHardInstance>(
      new SeparableHardInstance(mu, L_hat, n, c));
}

double SeparableHardInstance::component_smoothness() const {
  return mu_ + std::sqrt(static_cast<double>(constants_.n)) * L_hat_;
}

double SeparableHardInstance::component_value(Eigen::Index i,
                                              const PrimalDualPoint &z) const {
  check_component(i);
  check_dims(z);
  const double s = std::sqrt(static_cast<double>(constants_.n)) * L_hat_;
  const double dxv = z.x[i] - 1.0, dyv = z.y[i] - 1.0;
  return 0.5 * mu_ * (z.x.squaredNorm() - z.y.squaredNorm()) +
         0.5 * s * (dxv * dxv - dyv * dyv);
}

double SeparableHardInstance::value(const PrimalDualPoint &z) const {
  check_dims(z);
  const double s = std::sqrt(static_cast<double>(constants_.n)) * L_hat_;
  const double inv_n = 1.0 / static_cast<double>(constants_.n);
  return 0.5 * mu_ * (z.x.squaredNorm() - z.y.squaredNorm()) +
         0.5 * s * inv_n *
             ((z.x.array() - 1.0).square().sum() - (z.y.array() - 1.0).square().sum());
}

void SeparableHardInstance::component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                                               GradientPair &out) const {
  const double s = std::sqrt(static_cast<double>(constants_.n)) * L_hat_;
  out.gx = mu_ * z.x;
  out.gx[i] += s * (z.x[i] - 1.0);
  out.gy_negated = mu_ * z.y;
  out.gy_negated[i] += s * (z.y[i] - 1.0);
}

void SeparableHardInstance::full_gradient(const PrimalDualPoint &z,
                                          GradientPair &out) const {
  const double s =
      L_hat_ / std::sqrt(static_cast<double>(constants_.n));  // sqrt(n) Lh / n
  out.gx = mu_ * z.x + s * (z.x.array() - 1.0).matrix();
  out.gy_negated = mu_ * z.y + s * (z.y.array() - 1.0).matrix();
}

PrimalDualPoint SeparableHardInstance::known_saddle() const {
  const double v =
      L_hat_ / (L_hat_ + std::sqrt(static_cast<double>(constants_.n)) * mu_);
  return {Vector::Constant(dx_, v), Vector::Constant(dy_, v)};
}

namespace {

Eigen::Index prefix_support(const double *v, Eigen::Index d) {
  Eigen::Index last = 0;
  for (Eigen::Index j = 0; j < d; ++j)
    if (v[j] != 0.0) last = j + 1;
  return last;
}

}  // namespace

ZeroChainReport zero_chain_audit(const HardChainInstance &inst,
                                 const PrimalDualPoint &z0,
                                 const std::vector<ZeroChainStep> &steps) {
  if (z0.x.size() != inst.dx() || z0.y.size() != inst.dy())
    throw UsageError("zero-chain audit: start point dimension mismatch");
  if (z0.x.squaredNorm() != 0.0 || z0.y.squaredNorm() != 0.0)
    throw UsageError("zero-chain audit: run must start at the origin");
  const Eigen::Index n = inst.num_components();
  const Eigen::Index d = inst.block_dim();
  std::vector<long long> k(static_cast<std::size_t>(n), 0);

  ZeroChainReport report;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const auto &step = steps[t];
    if (step.z.x.size() != inst.dx() || step.z.y.size() != inst.dy())
      throw UsageError("zero-chain audit: query dimension mismatch");
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index sx = prefix_support(step.z.x.data() + i * d, d);
      const Eigen::Index sy = prefix_support(step.z.y.data() + i * d, d);
      const Eigen::Index s = std::max(sx, sy);
      if (s > k[static_cast<std::size_t>(i)]) {
        report.pass = false;
        report.first_violation_step = static_cast<long long>(t);
        report.block = i;
        report.message = "block " + std::to_string(i) + " support " +
                         std::to_string(s) + " exceeds query count " +
                         std::to_string(k[static_cast<std::size_t>(i)]) +
                         " at step " + std::to_string(t);
        return report;
      }
    }
    if (step.component < 0) {
      for (auto &ki : k) ++ki;
    } else {
      if (step.component >= n)
        throw UsageError("zero-chain audit: component index out of range");
      ++k[static_cast<std::size_t>(step.component)];
    }
  }
  return report;
}

RecordingProblem::RecordingProblem(ProblemPtr inner)
    : Problem(inner->dx(), inner->dy(), inner->constants(), inner->sets()),
      inner_(std::move(inner)) {}

double RecordingProblem::value(const PrimalDualPoint &z) const {
  return inner_->value(z);
}

double RecordingProblem::component_value(Eigen::Index i,
                                         const PrimalDualPoint &z) const {
  return inner_->component_value(i, z);
}

void RecordingProblem::component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                                          GradientPair &out) const {
  queries_.push_back({z, i});
  inner_->component_gradient(i, z, out);
}

void RecordingProblem::full_gradient(const PrimalDualPoint &z,
                                     GradientPair &out) const {
  queries_.push_back({z, -1});
  inner_->full_gradient(z, out);
}

}  // namespace minimax

#include "minimax/wireless.hpp"

#include "minimax/rng.hpp"

namespace minimax {

WirelessProblem::WirelessProblem(Vector a, Vector b, double R)
    : Problem(a.size(), a.size(),
              [&] {
                ProblemConstants c;
                c.n = a.size();
                c.L = 1.0;  // placeholder; replaced by the estimate below
                c.mu_x = 0.0;
                c.mu_y = 0.0;
                return c;
              }(),
              PrimalDualSet{FeasibleSet::nonneg_ball(R),
                            FeasibleSet::simplex_sum(static_cast<double>(a.size()))}),
      a_(std::move(a)),
      b_(std::move(b)) {}

std::shared_ptr<WirelessProblem> WirelessProblem::make(Vector a, Vector b, double R) {
  if (a.size() != b.size()) throw UsageError("wireless: a/b dimension mismatch");
  if (a.size() < 1) throw UsageError("wireless: need n >= 1");
  if (!(R > 0.0)) throw UsageError("wireless: radius must be positive");
  if ((a.array() < 0.0).any()) throw UsageError("wireless: a must be nonnegative");
  if ((b.array() <= 0.0).any()) throw UsageError("wireless: b must be positive");
  auto p = std::shared_ptr<WirelessProblem>(
      new WirelessProblem(std::move(a), std::move(b), R));
  // sampled over the feasible sets; the analytic bound degrades with min a_i,
  // so a 25% margin on the empirical value is the declared constant
  p->constants_.L = 1.25 * estimate_average_smoothness(*p, /*num_pairs=*/40,
                                                       /*radius=*/R,
                                                       /*seed=*/0x57495245ULL);
  return p;
}

std::shared_ptr<WirelessProblem> WirelessProblem::generate(Eigen::Index n, double R,
                                                           double lo, double hi,
                                                           std::uint64_t seed) {
  if (n < 1) throw UsageError("wireless generate: need n >= 1");
  if (!(hi >= lo) || lo < 0.0) throw UsageError("wireless generate: need 0 <= lo <= hi");
  Rng rng(seed);
  Vector a(n);
  for (Eigen::Index i = 0; i < n; ++i) a[i] = rng.uniform(lo, hi);
  return make(std::move(a), Vector::Ones(n), R);
}

double WirelessProblem::component_value(Eigen::Index i, const PrimalDualPoint &z) const {
  check_component(i);
  check_dims(z);
  const double t = a_[i] + z.y[i];
  if (!(t > 0.0)) throw NumericError("wireless: a_i + y_i must be positive");
  return -std::log1p(b_[i] * z.x[i] / t);
}

double WirelessProblem::value(const PrimalDualPoint &z) const {
  check_dims(z);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < constants_.n; ++i) {
    const double t = a_[i] + z.y[i];
    if (!(t > 0.0)) throw NumericError("wireless: a_i + y_i must be positive");
    acc -= std::log1p(b_[i] * z.x[i] / t);
  }
  return acc / static_cast<double>(constants_.n);
}

void WirelessProblem::pair_gradient(Eigen::Index i, double xi, double yi, double &gx,
                                    double &gy) const {
  const double t = a_[i] + yi;
  if (!(t > 0.0)) throw NumericError("wireless: a_i + y_i must be positive");
  const double denom = t + b_[i] * xi;
  gx = -b_[i] / denom;
  gy = b_[i] * xi / (t * denom);
}

void WirelessProblem::component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                                         GradientPair &out) const {
  out.gx.setZero();
  out.gy_negated.setZero();
  double gx, gy;
  pair_gradient(i, z.x[i], z.y[i], gx, gy);
  out.gx[i] = gx;
  out.gy_negated[i] = -gy;
}

void WirelessProblem::full_gradient(const PrimalDualPoint &z, GradientPair &out) const {
  const double inv_n = 1.0 / static_cast<double>(constants_.n);
  out.gx.resize(dx_);
  out.gy_negated.resize(dy_);
  for (Eigen::Index i = 0; i < constants_.n; ++i) {
    double gx, gy;
    pair_gradient(i, z.x[i], z.y[i], gx, gy);
    out.gx[i] = inv_n * gx;
    out.gy_negated[i] = -inv_n * gy;
  }
}

bool WirelessProblem::component_gradient_sparse(Eigen::Index i, const PrimalDualPoint &z,
                                                std::vector<SparseTriple> &out) const {
  check_component(i);
  check_dims(z);
  double gx, gy;
  pair_gradient(i, z.x[i], z.y[i], gx, gy);
  out.clear();
  out.push_back({0, i, gx});
  out.push_back({1, i, -gy});
  return true;
}

}  // namespace minimax

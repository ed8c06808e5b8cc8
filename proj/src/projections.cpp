#include "minimax/projections.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace minimax {

FeasibleSet FeasibleSet::whole_space() {
  FeasibleSet s;
  s.kind_ = Kind::WholeSpace;
  return s;
}

FeasibleSet FeasibleSet::ball(double radius) {
  if (!(radius > 0.0)) throw UsageError("ball: radius must be positive");
  FeasibleSet s;
  s.kind_ = Kind::Ball;
  s.radius_ = radius;
  return s;
}

FeasibleSet FeasibleSet::nonneg_ball(double radius) {
  if (!(radius > 0.0)) throw UsageError("nonneg_ball: radius must be positive");
  FeasibleSet s;
  s.kind_ = Kind::NonnegBall;
  s.radius_ = radius;
  return s;
}

FeasibleSet FeasibleSet::simplex_sum(double target_sum) {
  if (!(target_sum > 0.0)) throw UsageError("simplex_sum: target sum must be positive");
  FeasibleSet s;
  s.kind_ = Kind::SimplexSum;
  s.target_sum_ = target_sum;
  return s;
}

FeasibleSet FeasibleSet::box(Vector lo, Vector hi) {
  if (lo.size() != hi.size()) throw UsageError("box: lo/hi dimension mismatch");
  if (((hi - lo).array() < 0.0).any()) throw UsageError("box: requires lo <= hi");
  FeasibleSet s;
  s.kind_ = Kind::Box;
  s.lo_ = std::move(lo);
  s.hi_ = std::move(hi);
  return s;
}

double FeasibleSet::diameter(Eigen::Index dim) const {
  switch (kind_) {
    case Kind::WholeSpace:
      return std::numeric_limits<double>::infinity();
    case Kind::Ball:
    case Kind::NonnegBall:
      // the nonnegative cap still contains antipodal boundary pairs along axes
      // only for dim >= 2; 2R is an upper bound that is exact for Ball and a
      // valid diameter bound for NonnegBall (distance <= 2R always).
      return 2.0 * radius_;
    case Kind::SimplexSum:
      (void)dim;
      // farthest vertices are s*e_i and s*e_j
      return target_sum_ * std::sqrt(2.0);
    case Kind::Box:
      return (hi_ - lo_).norm();
  }
  return 0.0;
}

// Sort-based simplex projection: u_i = max(z_i - theta, 0) with theta chosen
// so the result sums to s. Coordinates exactly at theta map to zero.
static Vector project_simplex(const Vector &z, double s) {
  const Eigen::Index d = z.size();
  std::vector<double> sorted(z.data(), z.data() + d);
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cumsum = 0.0;
  double theta = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    cumsum += sorted[static_cast<std::size_t>(k)];
    const double t = (cumsum - s) / static_cast<double>(k + 1);
    if (k + 1 == d || sorted[static_cast<std::size_t>(k + 1)] <= t) {
      theta = t;
      break;
    }
  }
  Vector u(d);
  for (Eigen::Index i = 0; i < d; ++i) u[i] = std::max(z[i] - theta, 0.0);
  return u;
}

Vector FeasibleSet::project(const Vector &z) const {
  if (!z.allFinite()) throw NumericError("project: input has NaN/Inf");
  switch (kind_) {
    case Kind::WholeSpace:
      return z;
    case Kind::Ball: {
      const double nz = z.norm();
      if (nz <= radius_) return z;
      return (radius_ / nz) * z;
    }
    case Kind::NonnegBall: {
      // clip-then-scale is the exact projection onto {u >= 0, ||u|| <= R}
      Vector u = z.cwiseMax(0.0);
      const double nu = u.norm();
      if (nu <= radius_) return u;
      return (radius_ / nu) * u;
    }
    case Kind::SimplexSum:
      return project_simplex(z, target_sum_);
    case Kind::Box:
      if (z.size() != lo_.size()) throw UsageError("box project: dimension mismatch");
      return z.cwiseMax(lo_).cwiseMin(hi_);
  }
  return z;
}

bool FeasibleSet::contains(const Vector &z, double tol) const {
  switch (kind_) {
    case Kind::WholeSpace:
      return true;
    case Kind::Ball:
      return z.norm() <= radius_ + tol;
    case Kind::NonnegBall:
      return z.minCoeff() >= -tol && z.norm() <= radius_ + tol;
    case Kind::SimplexSum:
      return z.minCoeff() >= -tol && std::abs(z.sum() - target_sum_) <= tol;
    case Kind::Box:
      return ((z - lo_).array() >= -tol).all() && ((hi_ - z).array() >= -tol).all();
  }
  return false;
}

}  // namespace minimax

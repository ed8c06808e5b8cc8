#ifndef MINIMAX_PROJECTIONS_HPP
#define MINIMAX_PROJECTIONS_HPP

#include "minimax/types.hpp"

namespace minimax {

// Closed convex feasible sets used by the problem families. Parameters are
// validated at construction; project() never fails on a valid set.
class FeasibleSet {
 public:
  enum class Kind { WholeSpace, Ball, NonnegBall, SimplexSum, Box };

  static FeasibleSet whole_space();
  static FeasibleSet ball(double radius);
  static FeasibleSet nonneg_ball(double radius);
  static FeasibleSet simplex_sum(double target_sum);
  static FeasibleSet box(Vector lo, Vector hi);

  Kind kind() const { return kind_; }
  double radius() const { return radius_; }
  double target_sum() const { return target_sum_; }
  const Vector &lo() const { return lo_; }
  const Vector &hi() const { return hi_; }

  // Euclidean diameter in the given ambient dimension; +inf for whole space.
  double diameter(Eigen::Index dim) const;

  Vector project(const Vector &z) const;
  bool contains(const Vector &z, double tol = 1e-9) const;

 private:
  FeasibleSet() = default;
  Kind kind_ = Kind::WholeSpace;
  double radius_ = 0.0;
  double target_sum_ = 0.0;
  Vector lo_, hi_;
};

// Product set X x Y acting on a primal-dual point.
struct PrimalDualSet {
  FeasibleSet x_set;
  FeasibleSet y_set;

  PrimalDualPoint project(const PrimalDualPoint &z) const {
    return {x_set.project(z.x), y_set.project(z.y)};
  }
  bool contains(const PrimalDualPoint &z, double tol = 1e-9) const {
    return x_set.contains(z.x, tol) && y_set.contains(z.y, tol);
  }
};

}  // namespace minimax

#endif

#ifndef MINIMAX_TYPES_HPP
#define MINIMAX_TYPES_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace minimax {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Primal-dual iterate z = (x, y).
struct PrimalDualPoint {
  Vector x;
  Vector y;

  PrimalDualPoint() = default;
  PrimalDualPoint(Vector x_, Vector y_) : x(std::move(x_)), y(std::move(y_)) {}

  static PrimalDualPoint Zero(Eigen::Index dx, Eigen::Index dy) {
    return {Vector::Zero(dx), Vector::Zero(dy)};
  }
  static PrimalDualPoint Ones(Eigen::Index dx, Eigen::Index dy) {
    return {Vector::Ones(dx), Vector::Ones(dy)};
  }

  double squared_norm() const { return x.squaredNorm() + y.squaredNorm(); }
  double norm() const { return std::sqrt(squared_norm()); }
  bool all_finite() const { return x.allFinite() && y.allFinite(); }

  PrimalDualPoint operator-(const PrimalDualPoint &o) const {
    return {x - o.x, y - o.y};
  }
  PrimalDualPoint operator+(const PrimalDualPoint &o) const {
    return {x + o.x, y + o.y};
  }
  PrimalDualPoint operator*(double s) const { return {s * x, s * y}; }
};

inline double distance(const PrimalDualPoint &a, const PrimalDualPoint &b) {
  return (a - b).norm();
}

// Gradient operator value g(z) = (grad_x f, -grad_y f). Storing the negated
// dual gradient lets solvers treat the pair as a single monotone operator.
struct GradientPair {
  Vector gx;
  Vector gy_negated;

  GradientPair() = default;
  GradientPair(Eigen::Index dx, Eigen::Index dy)
      : gx(Vector::Zero(dx)), gy_negated(Vector::Zero(dy)) {}

  void set_zero() {
    gx.setZero();
    gy_negated.setZero();
  }
  double squared_norm() const { return gx.squaredNorm() + gy_negated.squaredNorm(); }
  double norm() const { return std::sqrt(squared_norm()); }
  bool all_finite() const { return gx.allFinite() && gy_negated.allFinite(); }
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace minimax

#endif

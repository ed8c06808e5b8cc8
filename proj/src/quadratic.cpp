#include "minimax/quadratic.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "minimax/rng.hpp"

namespace minimax {

QuadraticProblem::QuadraticProblem(std::vector<Matrix> A, std::vector<Matrix> B,
                                   std::vector<Matrix> C, std::vector<Vector> a,
                                   std::vector<Vector> c, ProblemConstants constants,
                                   PrimalDualSet sets)
    : Problem(A.empty() ? 0 : A[0].rows(), C.empty() ? 0 : C[0].rows(), constants,
              std::move(sets)),
      A_(std::move(A)),
      B_(std::move(B)),
      C_(std::move(C)),
      a_(std::move(a)),
      c_(std::move(c)) {
  const auto n = static_cast<std::size_t>(constants_.n);
  if (A_.size() != n || B_.size() != n || C_.size() != n || a_.size() != n ||
      c_.size() != n)
    throw UsageError("quadratic: component count mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (A_[i].rows() != dx_ || A_[i].cols() != dx_ || C_[i].rows() != dy_ ||
        C_[i].cols() != dy_ || B_[i].rows() != dx_ || B_[i].cols() != dy_ ||
        a_[i].size() != dx_ || c_[i].size() != dy_)
      throw UsageError("quadratic: matrix dimension mismatch");
  }
  A_bar_ = Matrix::Zero(dx_, dx_);
  B_bar_ = Matrix::Zero(dx_, dy_);
  C_bar_ = Matrix::Zero(dy_, dy_);
  a_bar_ = Vector::Zero(dx_);
  c_bar_ = Vector::Zero(dy_);
  for (std::size_t i = 0; i < n; ++i) {
    A_bar_ += A_[i];
    B_bar_ += B_[i];
    C_bar_ += C_[i];
    a_bar_ += a_[i];
    c_bar_ += c_[i];
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  A_bar_ *= inv_n;
  B_bar_ *= inv_n;
  C_bar_ *= inv_n;
  a_bar_ *= inv_n;
  c_bar_ *= inv_n;
}

double QuadraticProblem::component_value(Eigen::Index i, const PrimalDualPoint &z) const {
  check_component(i);
  check_dims(z);
  const auto k = static_cast<std::size_t>(i);
  return 0.5 * z.x.dot(A_[k] * z.x) + z.x.dot(B_[k] * z.y) -
         0.5 * z.y.dot(C_[k] * z.y) + a_[k].dot(z.x) - c_[k].dot(z.y);
}

double QuadraticProblem::value(const PrimalDualPoint &z) const {
  check_dims(z);
  return 0.5 * z.x.dot(A_bar_ * z.x) + z.x.dot(B_bar_ * z.y) -
         0.5 * z.y.dot(C_bar_ * z.y) + a_bar_.dot(z.x) - c_bar_.dot(z.y);
}

void QuadraticProblem::component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                                          GradientPair &out) const {
  const auto k = static_cast<std::size_t>(i);
  out.gx = A_[k] * z.x + B_[k] * z.y + a_[k];
  out.gy_negated = C_[k] * z.y - B_[k].transpose() * z.x + c_[k];
}

void QuadraticProblem::full_gradient(const PrimalDualPoint &z, GradientPair &out) const {
  out.gx = A_bar_ * z.x + B_bar_ * z.y + a_bar_;
  out.gy_negated = C_bar_ * z.y - B_bar_.transpose() * z.x + c_bar_;
}

void QuadraticProblem::solve_saddle() const {
  if (saddle_ready_) return;
  // stationarity of the mean operator: [A B; -B' C] [x; y] = [-a; -c]
  Matrix K(dx_ + dy_, dx_ + dy_);
  K.topLeftCorner(dx_, dx_) = A_bar_;
  K.topRightCorner(dx_, dy_) = B_bar_;
  K.bottomLeftCorner(dy_, dx_) = -B_bar_.transpose();
  K.bottomRightCorner(dy_, dy_) = C_bar_;
  Vector rhs(dx_ + dy_);
  rhs.head(dx_) = -a_bar_;
  rhs.tail(dy_) = -c_bar_;
  Eigen::FullPivLU<Matrix> lu(K);
  if (!lu.isInvertible()) throw NumericError("quadratic saddle system is singular");
  const Vector sol = lu.solve(rhs);
  saddle_ = {sol.head(dx_), sol.tail(dy_)};
  saddle_ready_ = true;
}

bool QuadraticProblem::has_known_saddle() const {
  if (sets_.x_set.kind() != FeasibleSet::Kind::WholeSpace ||
      sets_.y_set.kind() != FeasibleSet::Kind::WholeSpace)
    return false;
  solve_saddle();
  return true;
}

PrimalDualPoint QuadraticProblem::known_saddle() const {
  if (!has_known_saddle())
    throw UsageError("quadratic saddle oracle requires unconstrained sets");
  return saddle_;
}

double QuadraticProblem::duality_gap(const PrimalDualPoint &z) const {
  check_dims(z);
  if (sets_.x_set.kind() != FeasibleSet::Kind::WholeSpace ||
      sets_.y_set.kind() != FeasibleSet::Kind::WholeSpace)
    throw UsageError("quadratic duality gap requires unconstrained sets");
  // best response in y for fixed x: C y = B'x - c
  Eigen::FullPivLU<Matrix> luC(C_bar_);
  Eigen::FullPivLU<Matrix> luA(A_bar_);
  if (!luC.isInvertible() || !luA.isInvertible())
    throw NumericError("quadratic duality gap: curvature block singular");
  const Vector y_star = luC.solve(B_bar_.transpose() * z.x - c_bar_);
  const Vector x_star = luA.solve(-(B_bar_ * z.y + a_bar_));
  const double phi = value({z.x, y_star});
  const double psi = value({x_star, z.y});
  return phi - psi;
}

double QuadraticProblem::exact_average_smoothness() const {
  Matrix S = Matrix::Zero(dx_ + dy_, dx_ + dy_);
  Matrix M(dx_ + dy_, dx_ + dy_);
  for (std::size_t i = 0; i < A_.size(); ++i) {
    M.topLeftCorner(dx_, dx_) = A_[i];
    M.topRightCorner(dx_, dy_) = B_[i];
    M.bottomLeftCorner(dy_, dx_) = -B_[i].transpose();
    M.bottomRightCorner(dy_, dy_) = C_[i];
    S += M.transpose() * M;
  }
  S /= static_cast<double>(A_.size());
  Eigen::SelfAdjointEigenSolver<Matrix> es(S);
  return std::sqrt(es.eigenvalues().maxCoeff());
}

namespace {

Matrix random_symmetric_psd(Eigen::Index d, Rng &rng) {
  Matrix G(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index col = 0; col < d; ++col) G(r, col) = rng.normal();
  return (G.transpose() * G) / static_cast<double>(d);
}

double min_eigenvalue(const Matrix &S) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(S);
  return es.eigenvalues().minCoeff();
}

}  // namespace

std::shared_ptr<QuadraticProblem> QuadraticProblem::generate(const QuadraticConfig &cfg) {
  if (cfg.n < 1 || cfg.dx < 1 || cfg.dy < 1)
    throw UsageError("quadratic generate: n, dx, dy must be >= 1");
  if (!(cfg.L > cfg.mu_x) || !(cfg.L > cfg.mu_y))
    throw UsageError("quadratic generate: requires L > mu_x and L > mu_y");
  Rng rng(cfg.seed);
  const auto n = static_cast<std::size_t>(cfg.n);

  // raw curvature/coupling directions, mean-shifted so the scaled instance has
  // moduli exactly mu_x / mu_y regardless of the final scale
  std::vector<Matrix> Ah(n), Bh(n), Ch(n);
  Matrix Ah_bar = Matrix::Zero(cfg.dx, cfg.dx);
  Matrix Ch_bar = Matrix::Zero(cfg.dy, cfg.dy);
  for (std::size_t i = 0; i < n; ++i) {
    Ah[i] = random_symmetric_psd(cfg.dx, rng);
    Ch[i] = random_symmetric_psd(cfg.dy, rng);
    Bh[i] = Matrix(cfg.dx, cfg.dy);
    for (Eigen::Index r = 0; r < cfg.dx; ++r)
      for (Eigen::Index col = 0; col < cfg.dy; ++col)
        Bh[i](r, col) = rng.normal() / std::sqrt(static_cast<double>(cfg.dx));
    Ah_bar += Ah[i];
    Ch_bar += Ch[i];
  }
  Ah_bar /= static_cast<double>(n);
  Ch_bar /= static_cast<double>(n);
  const double shift_a = min_eigenvalue(Ah_bar);
  const double shift_c = min_eigenvalue(Ch_bar);
  for (std::size_t i = 0; i < n; ++i) {
    Ah[i].diagonal().array() -= shift_a;
    Ch[i].diagonal().array() -= shift_c;
  }

  std::vector<Vector> a(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = Vector(cfg.dx);
    c[i] = Vector(cfg.dy);
    for (Eigen::Index j = 0; j < cfg.dx; ++j) a[i][j] = cfg.linear_scale * rng.normal();
    for (Eigen::Index j = 0; j < cfg.dy; ++j) c[i][j] = cfg.linear_scale * rng.normal();
  }

  ProblemConstants constants;
  constants.n = cfg.n;
  constants.L = cfg.L;
  constants.mu_x = cfg.mu_x;
  constants.mu_y = cfg.mu_y;
  PrimalDualSet sets{FeasibleSet::whole_space(), FeasibleSet::whole_space()};

  auto assemble = [&](double s) {
    std::vector<Matrix> A(n), B(n), C(n);
    for (std::size_t i = 0; i < n; ++i) {
      A[i] = s * Ah[i];
      A[i].diagonal().array() += cfg.mu_x;
      C[i] = s * Ch[i];
      C[i].diagonal().array() += cfg.mu_y;
      B[i] = s * Bh[i];
    }
    return std::make_shared<QuadraticProblem>(std::move(A), std::move(B), std::move(C),
                                              a, c, constants, sets);
  };

  // L(s) is convex with L(0) = max(mu_x, mu_y) < L, so bisection on the
  // increasing branch pins the declared constant
  double lo = 0.0, hi = 1.0;
  while (assemble(hi)->exact_average_smoothness() < cfg.L) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw NumericError("quadratic generate: scale calibration diverged");
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (assemble(mid)->exact_average_smoothness() < cfg.L)
      lo = mid;
    else
      hi = mid;
  }
  return assemble(0.5 * (lo + hi));
}

}  // namespace minimax

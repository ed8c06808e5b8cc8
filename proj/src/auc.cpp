#include "minimax/auc.hpp"

namespace minimax {

AucProblem::AucProblem(std::vector<LabeledSparseRow> rows, double lambda,
                       Eigen::Index d, double p_hat)
    : Problem(d + 2, 1,
              [&] {
                ProblemConstants c;
                c.n = static_cast<Eigen::Index>(rows.size());
                c.L = 1.0;  // placeholder; replaced by the estimate below
                c.mu_x = lambda;
                c.mu_y = 2.0 * p_hat * (1.0 - p_hat);
                return c;
              }(),
              PrimalDualSet{FeasibleSet::whole_space(), FeasibleSet::whole_space()}),
      rows_(std::move(rows)),
      lambda_(lambda),
      d_(d),
      p_hat_(p_hat) {}

std::shared_ptr<AucProblem> AucProblem::make(std::vector<LabeledSparseRow> rows,
                                             double lambda) {
  if (rows.empty()) throw UsageError("auc: need at least one row");
  if (!(lambda > 0.0)) throw UsageError("auc: lambda must be positive");
  Eigen::Index d = 0;
  Eigen::Index positives = 0;
  for (const auto &r : rows) {
    if (r.label != 1 && r.label != -1) throw UsageError("auc: labels must be +1/-1");
    if (r.label == 1) ++positives;
    d = std::max(d, r.max_index() + 1);
  }
  if (d < 1) throw UsageError("auc: no features present");
  if (positives == 0 || positives == static_cast<Eigen::Index>(rows.size()))
    throw UsageError("auc: both labels must be present");
  const double p_hat =
      static_cast<double>(positives) / static_cast<double>(rows.size());
  auto p = std::shared_ptr<AucProblem>(
      new AucProblem(std::move(rows), lambda, d, p_hat));
  // the objective is quadratic in (x, y), so the pairwise ratio is exact per
  // direction; a 25% margin keeps the declared constant a safe upper bound
  p->constants_.L =
      1.25 * estimate_average_smoothness(*p, /*num_pairs=*/40, /*radius=*/1.0,
                                         /*seed=*/0x4155435fULL);
  return p;
}

double AucProblem::component_value(Eigen::Index i, const PrimalDualPoint &z) const {
  check_component(i);
  check_dims(z);
  const auto &r = rows_[static_cast<std::size_t>(i)];
  const double y = z.y[0];
  const double u = z.x[d_];
  const double v = z.x[d_ + 1];
  const double s = r.dot(z.x);  // features only touch the leading d coords
  double val = 0.5 * lambda_ * z.x.squaredNorm() - p_hat_ * (1.0 - p_hat_) * y * y;
  if (r.label == -1) {
    val += p_hat_ * ((s - v) * (s - v) + 2.0 * (1.0 + y) * s);
  } else {
    val += (1.0 - p_hat_) * ((s - u) * (s - u) - 2.0 * (1.0 + y) * s);
  }
  return val;
}

double AucProblem::value(const PrimalDualPoint &z) const {
  check_dims(z);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < constants_.n; ++i) acc += component_value(i, z);
  return acc / static_cast<double>(constants_.n);
}

void AucProblem::component_gradient(Eigen::Index i, const PrimalDualPoint &z,
                                    GradientPair &out) const {
  const auto &r = rows_[static_cast<std::size_t>(i)];
  const double y = z.y[0];
  const double u = z.x[d_];
  const double v = z.x[d_ + 1];
  const double s = r.dot(z.x);

  out.gx = lambda_ * z.x;
  double grad_y = -2.0 * p_hat_ * (1.0 - p_hat_) * y;
  if (r.label == -1) {
    const double coef = p_hat_ * (2.0 * (s - v) + 2.0 * (1.0 + y));
    for (const auto &[j, a] : r.features) out.gx[j] += coef * a;
    out.gx[d_ + 1] += -2.0 * p_hat_ * (s - v);
    grad_y += 2.0 * p_hat_ * s;
  } else {
    const double coef = (1.0 - p_hat_) * (2.0 * (s - u) - 2.0 * (1.0 + y));
    for (const auto &[j, a] : r.features) out.gx[j] += coef * a;
    out.gx[d_] += -2.0 * (1.0 - p_hat_) * (s - u);
    grad_y += -2.0 * (1.0 - p_hat_) * s;
  }
  out.gy_negated[0] = -grad_y;
}

}  // namespace minimax

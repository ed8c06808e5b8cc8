#ifndef MINIMAX_ROWS_HPP
#define MINIMAX_ROWS_HPP

#include <utility>
#include <vector>

#include "minimax/types.hpp"

namespace minimax {

// One labeled example with 0-based sparse features.
struct LabeledSparseRow {
  std::vector<std::pair<Eigen::Index, double>> features;  // sorted by index
  int label = 0;                                          // +1 or -1

  double dot(const Vector &theta) const {
    double s = 0.0;
    for (const auto &[j, v] : features) s += v * theta[j];
    return s;
  }
  Eigen::Index max_index() const {
    Eigen::Index m = -1;
    for (const auto &[j, v] : features) {
      (void)v;
      if (j > m) m = j;
    }
    return m;
  }
};

}  // namespace minimax

#endif

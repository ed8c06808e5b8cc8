#ifndef MINIMAX_VERIFY_HPP
#define MINIMAX_VERIFY_HPP

#include <string>
#include <vector>

namespace minimax {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const {
    for (const auto &c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Suites: projections, smoothness, saddles, zero_chain, lemmas, all.
// Fixed seeds; deterministic. Unknown name -> UsageError.
VerifyReport run_verify_suite(const std::string &suite);

}  // namespace minimax

#endif

#ifndef MINIMAX_SPEC_PARSE_HPP
#define MINIMAX_SPEC_PARSE_HPP

#include <cstdint>
#include <map>
#include <string>

#include "minimax/problem.hpp"

namespace minimax {

// "family:key=value,key=value" descriptors used by the C API and the CLI.
struct ParsedSpec {
  std::string family;
  std::map<std::string, std::string> kv;

  bool has(const std::string &key) const { return kv.count(key) != 0; }
  double get_double(const std::string &key, double fallback) const;
  double require_double(const std::string &key) const;
  long long get_int(const std::string &key, long long fallback) const;
  std::string get_string(const std::string &key, std::string fallback) const;
};

ParsedSpec parse_spec(const std::string &text);

// Builds a problem from a descriptor. Families:
//   quadratic: n, dx, dy, L, mu_x, mu_y, linear_scale, seed
//   auc:       path (sparse text data), lambda
//   wireless:  n, R, lo, hi, seed  -- or path (noise vector file), R
//   hardchain: L, mu, n, eps  -- or alpha, lambda, d, n
//   separable: L, mu, n
// default_seed applies when the descriptor has no seed of its own.
ProblemPtr make_problem(const std::string &spec, std::uint64_t default_seed);

}  // namespace minimax

#endif

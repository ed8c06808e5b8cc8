#include "minimax/spec_parse.hpp"

#include "minimax/auc.hpp"
#include "minimax/data_io.hpp"
#include "minimax/lowerbound.hpp"
#include "minimax/quadratic.hpp"
#include "minimax/wireless.hpp"

namespace minimax {

double ParsedSpec::get_double(const std::string &key, double fallback) const {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception &) {
    throw UsageError("spec: bad numeric value for '" + key + "': " + it->second);
  }
}

double ParsedSpec::require_double(const std::string &key) const {
  if (!has(key)) throw UsageError("spec: missing required key '" + key + "'");
  return get_double(key, 0.0);
}

long long ParsedSpec::get_int(const std::string &key, long long fallback) const {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception &) {
    throw UsageError("spec: bad integer value for '" + key + "': " + it->second);
  }
}

std::string ParsedSpec::get_string(const std::string &key, std::string fallback) const {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

ParsedSpec parse_spec(const std::string &text) {
  ParsedSpec spec;
  const auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  if (spec.family.empty()) throw UsageError("spec: empty family name");
  if (colon == std::string::npos) return spec;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    const std::string item = rest.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("spec: expected key=value, got '" + item + "'");
    spec.kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return spec;
}

ProblemPtr make_problem(const std::string &text, std::uint64_t default_seed) {
  const ParsedSpec s = parse_spec(text);
  const auto seed = static_cast<std::uint64_t>(
      s.get_int("seed", static_cast<long long>(default_seed)));

  if (s.family == "quadratic") {
    QuadraticConfig cfg;
    cfg.n = s.get_int("n", cfg.n);
    cfg.dx = s.get_int("dx", cfg.dx);
    cfg.dy = s.get_int("dy", cfg.dy);
    cfg.L = s.get_double("L", cfg.L);
    cfg.mu_x = s.get_double("mu_x", cfg.mu_x);
    cfg.mu_y = s.get_double("mu_y", cfg.mu_y);
    cfg.linear_scale = s.get_double("linear_scale", cfg.linear_scale);
    cfg.seed = seed;
    return QuadraticProblem::generate(cfg);
  }
  if (s.family == "auc") {
    const std::string path = s.get_string("path", "");
    if (path.empty()) throw UsageError("spec: auc needs path=<data file>");
    return AucProblem::make(load_libsvm_file(path), s.get_double("lambda", 1e-10));
  }
  if (s.family == "wireless") {
    const double R = s.get_double("R", 1.0);
    const std::string path = s.get_string("path", "");
    if (!path.empty()) {
      Vector a = read_vector_file(path);
      Vector b = Vector::Ones(a.size());
      return WirelessProblem::make(std::move(a), std::move(b), R);
    }
    return WirelessProblem::generate(s.get_int("n", 50), R, s.get_double("lo", 0.0),
                                     s.get_double("hi", 10.0), seed);
  }
  if (s.family == "hardchain") {
    if (s.has("alpha"))
      return HardChainInstance::make(s.require_double("alpha"),
                                     s.require_double("lambda"), s.get_int("d", 8),
                                     s.get_int("n", 4));
    return HardChainInstance::build(s.require_double("L"), s.require_double("mu"),
                                    s.get_int("n", 4), s.get_double("eps", 1e-3));
  }
  if (s.family == "separable") {
    return SeparableHardInstance::build(s.require_double("L"), s.require_double("mu"),
                                        s.get_int("n", 4));
  }
  throw UsageError("spec: unknown problem family '" + s.family + "'");
}

}  // namespace minimax

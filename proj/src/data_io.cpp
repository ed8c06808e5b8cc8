#include "minimax/data_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace minimax {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string &what) {
  throw IoError("libsvm parse error, line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<LabeledSparseRow> parse_libsvm(std::istream &in) {
  std::vector<LabeledSparseRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string token;
    if (!(ls >> token)) continue;  // blank line
    if (token[0] == '#') continue;

    LabeledSparseRow row;
    try {
      std::size_t pos = 0;
      const double lab = std::stod(token, &pos);
      if (pos != token.size()) parse_fail(lineno, "bad label '" + token + "'");
      row.label = lab > 0.0 ? 1 : -1;
    } catch (const std::invalid_argument &) {
      parse_fail(lineno, "bad label '" + token + "'");
    } catch (const std::out_of_range &) {
      parse_fail(lineno, "label out of range '" + token + "'");
    }

    long long prev_index = 0;
    while (ls >> token) {
      if (token[0] == '#') break;  // trailing comment
      const auto colon = token.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
        parse_fail(lineno, "expected index:value, got '" + token + "'");
      long long index = 0;
      double value = 0.0;
      try {
        std::size_t pos = 0;
        index = std::stoll(token.substr(0, colon), &pos);
        if (pos != colon) parse_fail(lineno, "bad index in '" + token + "'");
        const std::string vs = token.substr(colon + 1);
        value = std::stod(vs, &pos);
        if (pos != vs.size()) parse_fail(lineno, "bad value in '" + token + "'");
      } catch (const IoError &) {
        throw;
      } catch (const std::exception &) {
        parse_fail(lineno, "bad token '" + token + "'");
      }
      if (index < 1) parse_fail(lineno, "index must be >= 1 in '" + token + "'");
      if (index <= prev_index) parse_fail(lineno, "non-increasing index");
      if (!std::isfinite(value)) parse_fail(lineno, "non-finite value");
      prev_index = index;
      if (value != 0.0)
        row.features.emplace_back(static_cast<Eigen::Index>(index - 1), value);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<LabeledSparseRow> load_libsvm_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_libsvm(in);
}

void write_trace_csv(const SolverTrace &trace, Eigen::Index n, std::ostream &out) {
  out << "iteration,sfo_calls,epoch";
  for (const auto &name : trace.metric_names) out << "," << name;
  out << "\n";
  for (const auto &cp : trace.checkpoints) {
    out << cp.iteration << "," << cp.sfo << ","
        << format_real(static_cast<double>(cp.sfo) / static_cast<double>(n));
    for (double v : cp.values) out << "," << format_real(v);
    out << "\n";
  }
  if (!out) throw IoError("trace write failed");
}

void write_trace_csv_file(const SolverTrace &trace, Eigen::Index n,
                          const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_trace_csv(trace, n, out);
}

void write_vector_file(const Vector &v, const std::string &header, std::ostream &out) {
  if (!header.empty()) out << "# " << header << "\n";
  for (Eigen::Index i = 0; i < v.size(); ++i) out << format_real(v[i]) << "\n";
  if (!out) throw IoError("vector write failed");
}

void write_vector_file(const Vector &v, const std::string &header,
                       const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_vector_file(v, header, out);
}

Vector read_vector_file(std::istream &in) {
  std::vector<double> vals;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string token;
    if (!(ls >> token) || token[0] == '#') continue;
    try {
      std::size_t pos = 0;
      const double v = std::stod(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      vals.push_back(v);
    } catch (const std::exception &) {
      throw IoError("vector file parse error, line " + std::to_string(lineno));
    }
  }
  Vector v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
  return v;
}

Vector read_vector_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_vector_file(in);
}

}  // namespace minimax

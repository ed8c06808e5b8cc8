#ifndef MINIMAX_DATA_IO_HPP
#define MINIMAX_DATA_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "minimax/rows.hpp"
#include "minimax/solvers.hpp"

namespace minimax {

// Sparse text format: one "<label> <index>:<value> ..." record per line,
// 1-based strictly increasing indices, '#' comments and blank lines skipped.
// Labels parsing to a positive number become +1, everything else -1;
// zero-valued features are dropped. Stored indices are 0-based.
std::vector<LabeledSparseRow> parse_libsvm(std::istream &in);
std::vector<LabeledSparseRow> load_libsvm_file(const std::string &path);

// Header "iteration,sfo_calls,epoch,<metric names...>"; epoch = sfo / n.
// Reals carry 17 significant digits; LF line endings; byte-stable.
void write_trace_csv(const SolverTrace &trace, Eigen::Index n, std::ostream &out);
void write_trace_csv_file(const SolverTrace &trace, Eigen::Index n,
                          const std::string &path);

// One value per line, '#' header comments.
void write_vector_file(const Vector &v, const std::string &header, std::ostream &out);
void write_vector_file(const Vector &v, const std::string &header,
                       const std::string &path);
Vector read_vector_file(std::istream &in);
Vector read_vector_file(const std::string &path);

// "%.17g" rendering used for every real in persisted files.
std::string format_real(double v);

}  // namespace minimax

#endif

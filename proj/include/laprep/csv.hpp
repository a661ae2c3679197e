#ifndef LAPREP_CSV_HPP
#define LAPREP_CSV_HPP

#include <Eigen/Dense>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace laprep {

/// Round-trip exact formatting for doubles. Integral values print without
/// exponent so CSV diffs stay readable.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Write a matrix as CSV, one row per line, optional header line.
void write_csv_matrix(const std::string& path, const Eigen::MatrixXd& m,
                      const std::string& header = "");

Eigen::MatrixXd read_csv_matrix(const std::string& path, bool skip_header);

std::vector<std::string> split(const std::string& line, char delim);

}  // namespace laprep

#endif

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace greedykit {

/// Shortest round-trippable decimal rendering (printf %.17g); "nan" for
/// missing ratios.
std::string format_real(double value);

/// One estimator evaluation: the element drawn under `seed`, the greedy set
/// of size m, its budget, and the residual against both oracle distances.
struct SampleRow {
  std::uint64_t seed = 0;
  std::string basis;
  double t = 1.0;
  int m = 0;
  double budget = 0.0;
  double residual = 0.0;
  double sigma = 0.0;
  double d = 0.0;
  double ratio_sigma = 0.0;
  double ratio_d = 0.0;
};

/// CSV with a "# generated ..." timestamp line, a fixed header, and one line
/// per row; everything after the first line is deterministic.
std::string sample_csv(const std::vector<SampleRow>& rows);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace greedykit

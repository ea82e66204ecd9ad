#include "greedykit/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace greedykit {

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::string timestamp_line() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buffer[64];
  std::tm parts{};
  gmtime_r(&now, &parts);
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &parts);
  return std::string("# generated ") + buffer + "\n";
}

}  // namespace

std::string sample_csv(const std::vector<SampleRow>& rows) {
  std::string out = timestamp_line();
  out += "seed,basis,t,m,budget,residual,sigma,d,ratio_sigma,ratio_d\n";
  for (const SampleRow& row : rows) {
    out += std::to_string(row.seed);
    out += ',';
    out += row.basis;
    out += ',';
    out += format_real(row.t);
    out += ',';
    out += std::to_string(row.m);
    out += ',';
    out += format_real(row.budget);
    out += ',';
    out += format_real(row.residual);
    out += ',';
    out += format_real(row.sigma);
    out += ',';
    out += format_real(row.d);
    out += ',';
    out += format_real(row.ratio_sigma);
    out += ',';
    out += format_real(row.ratio_d);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  out << contents;
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace greedykit

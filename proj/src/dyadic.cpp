#include "greedykit/dyadic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace greedykit {

namespace detail {

void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

}  // namespace detail

using detail::require;

double stable_sum(std::span<const double> values) {
  double sum = 0.0;
  double compensation = 0.0;
  for (double v : values) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      compensation += (sum - t) + v;
    } else {
      compensation += (v - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

double DyadicInterval::measure() const { return std::ldexp(1.0, -level); }

double DyadicInterval::left() const {
  return std::ldexp(static_cast<double>(position), -level);
}

double DyadicInterval::right() const {
  return std::ldexp(static_cast<double>(position + 1), -level);
}

DyadicInterval DyadicInterval::left_child() const {
  return {level + 1, 2 * position};
}

DyadicInterval DyadicInterval::right_child() const {
  return {level + 1, 2 * position + 1};
}

DyadicInterval DyadicInterval::parent() const {
  require(level >= 1, "root interval has no parent");
  return {level - 1, position >> 1};
}

bool DyadicInterval::contains(const DyadicInterval& other) const {
  if (other.level < level) return false;
  return (other.position >> (other.level - level)) == position;
}

std::string DyadicInterval::key() const {
  return std::to_string(level) + ":" + std::to_string(position);
}

DyadicInterval DyadicInterval::from_key(const std::string& key) {
  auto colon = key.find(':');
  require(colon != std::string::npos, "interval key must look like \"n:j\": " + key);
  int level = 0;
  std::int64_t position = 0;
  try {
    level = std::stoi(key.substr(0, colon));
    position = std::stoll(key.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("interval key must look like \"n:j\": " + key);
  }
  return make_interval(level, position);
}

DyadicInterval make_interval(int level, std::int64_t position) {
  require(level >= 0 && level <= kMaxLevel,
          "interval level out of range [0, " + std::to_string(kMaxLevel) +
              "]: " + std::to_string(level));
  require(position >= 0 && position < (std::int64_t{1} << level),
          "interval position out of range at level " + std::to_string(level) +
              ": " + std::to_string(position));
  return {level, position};
}

StepFunction::StepFunction(int level, std::vector<double> values)
    : level_(level), values_(std::move(values)) {
  require(level >= 0 && level <= kMaxLevel,
          "step function level out of range [0, " + std::to_string(kMaxLevel) +
              "]: " + std::to_string(level));
  require(values_.size() == (std::size_t{1} << level),
          "step function at level " + std::to_string(level) + " needs " +
              std::to_string(std::size_t{1} << level) + " values, got " +
              std::to_string(values_.size()));
}

StepFunction StepFunction::constant(double value, int level) {
  require(level >= 0 && level <= kMaxLevel, "level out of range");
  return StepFunction(level,
                      std::vector<double>(std::size_t{1} << level, value));
}

double StepFunction::operator()(double x) const {
  require(x >= 0.0 && x < 1.0, "evaluation point outside [0,1)");
  auto cell = static_cast<std::size_t>(std::ldexp(x, level_));
  if (cell >= values_.size()) cell = values_.size() - 1;
  return values_[cell];
}

StepFunction StepFunction::refined(int new_level) const {
  require(new_level >= level_, "refinement cannot coarsen a step function");
  require(new_level <= kMaxLevel, "refinement exceeds the resolution cap");
  if (new_level == level_) return *this;
  const std::size_t copies = std::size_t{1} << (new_level - level_);
  std::vector<double> values;
  values.reserve(values_.size() * copies);
  for (double v : values_) values.insert(values.end(), copies, v);
  return StepFunction(new_level, std::move(values));
}

double StepFunction::min_value() const {
  double m = values_.front();
  for (double v : values_) m = std::min(m, v);
  return m;
}

double StepFunction::max_value() const {
  double m = values_.front();
  for (double v : values_) m = std::max(m, v);
  return m;
}

std::pair<std::int64_t, std::int64_t> cell_range(const DyadicInterval& interval,
                                                 int level) {
  require(interval.level <= level,
          "interval at level " + std::to_string(interval.level) +
              " is finer than the requested cell level " +
              std::to_string(level));
  const int shift = level - interval.level;
  return {interval.position << shift, std::int64_t{1} << shift};
}

std::vector<std::int64_t> cells_of(const DyadicInterval& interval, int level) {
  auto [first, count] = cell_range(interval, level);
  std::vector<std::int64_t> cells(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) cells[static_cast<std::size_t>(i)] = first + i;
  return cells;
}

double integrate(const StepFunction& f) {
  return std::ldexp(stable_sum(f.values()), -f.level());
}

namespace {

std::pair<StepFunction, StepFunction> common_level(const StepFunction& f,
                                                   const StepFunction& g) {
  const int level = std::max(f.level(), g.level());
  return {f.refined(level), g.refined(level)};
}

}  // namespace

double weighted_lp_norm(const StepFunction& f, double p,
                        const StepFunction& weight) {
  require(p >= 1.0, "lp exponent must satisfy p >= 1");
  require(weight.min_value() > 0.0, "weight must be strictly positive");
  auto [ff, ww] = common_level(f, weight);
  const auto fv = ff.values();
  const auto wv = ww.values();
  std::vector<double> terms(fv.size());
  if (p == 2.0) {
    for (std::size_t i = 0; i < fv.size(); ++i) terms[i] = fv[i] * fv[i] * wv[i];
  } else if (p == 1.0) {
    for (std::size_t i = 0; i < fv.size(); ++i) terms[i] = std::abs(fv[i]) * wv[i];
  } else {
    for (std::size_t i = 0; i < fv.size(); ++i)
      terms[i] = std::pow(std::abs(fv[i]), p) * wv[i];
  }
  const double sum = std::ldexp(stable_sum(terms), -ff.level());
  if (p == 1.0) return sum;
  if (p == 2.0) return std::sqrt(sum);
  return std::pow(sum, 1.0 / p);
}

StepFunction add(const StepFunction& f, const StepFunction& g) {
  auto [ff, gg] = common_level(f, g);
  std::vector<double> values(ff.num_cells());
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = ff.value(i) + gg.value(i);
  return StepFunction(ff.level(), std::move(values));
}

StepFunction scale(const StepFunction& f, double factor) {
  std::vector<double> values(f.values().begin(), f.values().end());
  for (double& v : values) v *= factor;
  return StepFunction(f.level(), std::move(values));
}

StepFunction multiply(const StepFunction& f, const StepFunction& g) {
  auto [ff, gg] = common_level(f, g);
  std::vector<double> values(ff.num_cells());
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = ff.value(i) * gg.value(i);
  return StepFunction(ff.level(), std::move(values));
}

StepFunction abs_pow(const StepFunction& f, double q) {
  std::vector<double> values(f.num_cells());
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = std::pow(std::abs(f.value(i)), q);
  return StepFunction(f.level(), std::move(values));
}

}  // namespace greedykit

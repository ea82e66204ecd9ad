#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace greedykit {

/// Hard cap on the dyadic resolution: at most 2^20 cells per function.
inline constexpr int kMaxLevel = 20;

/// Default resolution used when callers do not ask for one.
inline constexpr int kDefaultLevel = 8;

/// Half-open dyadic interval [j 2^-n, (j+1) 2^-n) of [0,1), identified by
/// (level n, position j) with 0 <= j < 2^n.  All lattice arithmetic is done
/// with integer shifts, never floating division.
struct DyadicInterval {
  int level = 0;
  std::int64_t position = 0;

  double measure() const;  // exactly 2^-level
  double left() const;
  double right() const;

  DyadicInterval left_child() const;
  DyadicInterval right_child() const;
  DyadicInterval parent() const;  // requires level >= 1

  /// True iff `other` is contained in (or equal to) this interval.
  bool contains(const DyadicInterval& other) const;

  /// Text key "n:j" used in serialized maps.
  std::string key() const;
  static DyadicInterval from_key(const std::string& key);

  static DyadicInterval root() { return {0, 0}; }

  auto operator<=>(const DyadicInterval&) const = default;
};

/// Validates (level, position) and throws std::invalid_argument otherwise.
DyadicInterval make_interval(int level, std::int64_t position);

/// A real function on [0,1) constant on the 2^L cells of resolution level L.
/// Immutable after construction; all operations return new values.
class StepFunction {
 public:
  StepFunction(int level, std::vector<double> values);

  static StepFunction constant(double value, int level = 0);

  int level() const { return level_; }
  std::size_t num_cells() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double value(std::size_t cell) const { return values_[cell]; }

  /// Pointwise evaluation: values[floor(x * 2^L)] for x in [0,1).
  double operator()(double x) const;

  /// Same function represented at a finer level L' >= L.
  StepFunction refined(int new_level) const;

  double min_value() const;
  double max_value() const;

 private:
  int level_;
  std::vector<double> values_;
};

/// Indices of the level-L cells covering I (exactly 2^(L - I.level) of them,
/// consecutive).  Rejects I.level > L.
std::vector<std::int64_t> cells_of(const DyadicInterval& interval, int level);

/// First cell index and cell count of I at level L, without materializing the
/// index list.
std::pair<std::int64_t, std::int64_t> cell_range(const DyadicInterval& interval,
                                                 int level);

/// Exact integral over [0,1): 2^-L * sum of cell values.
double integrate(const StepFunction& f);

/// (int_0^1 |f|^p w dx)^(1/p).  Requires p >= 1 and w > 0 pointwise; operands
/// are refined to a common level before summing.
double weighted_lp_norm(const StepFunction& f, double p,
                        const StepFunction& weight);

StepFunction add(const StepFunction& f, const StepFunction& g);
StepFunction scale(const StepFunction& f, double factor);
StepFunction multiply(const StepFunction& f, const StepFunction& g);
/// |f|^q cellwise.
StepFunction abs_pow(const StepFunction& f, double q);

/// Compensated (Neumaier) sum; keeps integrals and norms accurate at the
/// deepest resolutions.
double stable_sum(std::span<const double> values);

namespace detail {
void require(bool condition, const std::string& what);
}

}  // namespace greedykit

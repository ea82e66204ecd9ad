#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "greedykit/dyadic.hpp"

namespace greedykit {

/// A strictly positive dyadic step weight together with precomputed interval
/// masses w(I) for every dyadic I down to the weight's resolution.
class DyadicWeight {
 public:
  explicit DyadicWeight(StepFunction base);

  const StepFunction& base() const { return base_; }
  int level() const { return base_.level(); }

  /// w(I) = int_I w(x) dx.  Rejects intervals deeper than the resolution.
  double interval_mass(const DyadicInterval& interval) const;

  /// w(I)/|I|.
  double interval_mean(const DyadicInterval& interval) const;

 private:
  StepFunction base_;
  // sums_[n][j] = mass of interval (n, j); n = 0..level.
  std::vector<std::vector<double>> sums_;
};

double weight_of_interval(const DyadicWeight& weight,
                          const DyadicInterval& interval);

/// Positive reals indexed by the full dyadic tree for levels 0..L.
class IndexedSequence {
 public:
  IndexedSequence(int max_level, std::vector<std::vector<double>> entries);

  static IndexedSequence constant(int max_level, double value);
  static IndexedSequence from_function(
      int max_level, const std::function<double(const DyadicInterval&)>& f);
  /// w_I = mass of I under the weight, for every I down to max_level.
  static IndexedSequence interval_masses(const DyadicWeight& weight,
                                         int max_level);

  int max_level() const { return max_level_; }
  double at(const DyadicInterval& interval) const;

  double min_entry() const;
  double max_entry() const;

  std::map<std::string, double> as_key_map() const;
  static IndexedSequence from_key_map(const std::map<std::string, double>& map);

 private:
  int max_level_;
  std::vector<std::vector<double>> entries_;
};

/// Truncated dyadic A_p characteristic: max over I with I.level <= max_level
/// of m_I(w) * m_I(w^(-1/(p-1)))^(p-1).  Always >= 1.  Requires p > 1.
double apd_constant(const DyadicWeight& weight, double p, int max_level);

/// Largest child/parent mass ratio over parents with level <= max_level - 1.
/// The reverse doubling condition holds at this truncation iff the result
/// is < 1; nested strict inclusions compose multiplicatively from it.
double reverse_doubling_delta(const DyadicWeight& weight, int max_level);

/// Truncated reverse Carleson constant of order alpha:
/// max over J with J.level <= max_level of w(J)^alpha * sum over the ancestor
/// chain I >= J of w(I)^(-alpha).  Always >= 1.  Requires alpha > 0.
double carleson_constant(const DyadicWeight& weight, double alpha,
                         int max_level);

/// Two-sequence generalization: max over J of v_J^alpha * sum over the
/// ancestor chain of w_I^(-alpha).  Sequences must share the same domain.
double pair_drcc_constant(const IndexedSequence& w, const IndexedSequence& v,
                          double alpha, int max_level);

/// Reproducible random weight: i.i.d. cell values log-uniform on
/// [e^-spread, e^spread].
StepFunction random_weight(int level, double spread, std::mt19937_64& rng);

/// x^exponent sampled at cell midpoints; the cell containing 0 is floored at
/// (2^(-level-1))^exponent so the weight stays strictly positive.
StepFunction power_weight(int level, double exponent);

}  // namespace greedykit

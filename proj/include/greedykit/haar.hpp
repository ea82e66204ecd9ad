#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "greedykit/dyadic.hpp"
#include "greedykit/weights.hpp"

namespace greedykit {

/// Index into the Haar system on [0,1): either the constant function (Root)
/// or the oscillating function supported on a dyadic interval.
struct HaarIndex {
  bool root = true;
  DyadicInterval interval;  // meaningful only when !root

  static HaarIndex make_root() { return HaarIndex{}; }
  static HaarIndex of(const DyadicInterval& iv) { return {false, iv}; }

  std::string key() const { return root ? "root" : interval.key(); }
  static HaarIndex from_key(const std::string& key);

  bool operator==(const HaarIndex& other) const {
    return root == other.root && (root || interval == other.interval);
  }
};

/// Canonical enumeration of the Haar universe at resolution L: ordinal 0 is
/// Root, ordinal 2^n + j is the interval (n, j) with n <= L-1.  The universe
/// has exactly 2^L members.
std::size_t haar_universe_size(int level);
std::size_t haar_ordinal(const HaarIndex& index);
HaarIndex haar_index_at(std::size_t ordinal);

/// The Haar function itself, as a level-L step function: Root is constantly
/// 1; the interval (n, j) function is +2^(n/2) on its left half, -2^(n/2) on
/// its right half, 0 elsewhere.  Interval indices require n <= L-1.
StepFunction haar_function(const HaarIndex& index, int level);

/// ||H_idx||_{p,w}: w(I)^(1/p) / |I|^(1/2) for intervals, w([0,1))^(1/p) for
/// Root.
double haar_function_norm(const HaarIndex& index, double p,
                          const DyadicWeight& weight);

/// A finite Haar coefficient map at resolution L, stored densely in the
/// canonical enumeration order.
class HaarExpansion {
 public:
  explicit HaarExpansion(int level);
  HaarExpansion(int level, std::vector<double> coefficients);

  int level() const { return level_; }
  std::size_t universe_size() const { return coefficients_.size(); }

  double coefficient(const HaarIndex& index) const;
  void set_coefficient(const HaarIndex& index, double value);

  double coefficient_at(std::size_t ordinal) const {
    return coefficients_[ordinal];
  }
  std::span<const double> coefficients() const { return coefficients_; }

 private:
  int level_;
  std::vector<double> coefficients_;
};

/// Haar analysis: coefficient at idx equals the inner product of f with
/// haar_function(idx, f.level()).  Runs as a fast O(2^L) transform.
HaarExpansion analyze(const StepFunction& f);

/// Haar synthesis: the step function with the given coefficients.
StepFunction synthesize(const HaarExpansion& expansion);

/// ||c_idx H_idx||_{p,w} = |c_idx| * ||H_idx||_{p,w}.
double coefficient_weighted_norm(const HaarExpansion& expansion,
                                 const HaarIndex& index, double p,
                                 const DyadicWeight& weight);

/// The square function S = (c_root^2 + sum_I c_I^2 chi_I / |I|)^(1/2) as a
/// level-L step function.  Independent of p and the weight.
StepFunction square_function(const HaarExpansion& expansion);

/// ||f||_{X^p(w)} = ||square_function||_{p,w}.  Unconditional with constant
/// 1: coefficient signs never change the value.
double xp_norm(const HaarExpansion& expansion, double p,
               const DyadicWeight& weight);

/// Norm of sum over idx in lambda of sign(idx) * H_idx / ||H_idx||_{p,w} in
/// X^p(w), at the given resolution.  Independent of the sign choice; an empty
/// sign list means all +1.
double indicator_sum_norm(std::span<const HaarIndex> lambda, double p,
                          const DyadicWeight& weight, int level,
                          std::span<const int> signs = {});

}  // namespace greedykit

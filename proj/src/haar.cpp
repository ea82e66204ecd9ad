#include "greedykit/haar.hpp"

#include <bit>
#include <cmath>

namespace greedykit {

using detail::require;

HaarIndex HaarIndex::from_key(const std::string& key) {
  if (key == "root") return make_root();
  return of(DyadicInterval::from_key(key));
}

std::size_t haar_universe_size(int level) {
  require(level >= 0 && level <= kMaxLevel, "level out of range");
  return std::size_t{1} << level;
}

std::size_t haar_ordinal(const HaarIndex& index) {
  if (index.root) return 0;
  return (std::size_t{1} << index.interval.level) +
         static_cast<std::size_t>(index.interval.position);
}

HaarIndex haar_index_at(std::size_t ordinal) {
  if (ordinal == 0) return HaarIndex::make_root();
  const int level = static_cast<int>(std::bit_width(ordinal)) - 1;
  const auto position =
      static_cast<std::int64_t>(ordinal - (std::size_t{1} << level));
  return HaarIndex::of(DyadicInterval{level, position});
}

StepFunction haar_function(const HaarIndex& index, int level) {
  if (index.root) return StepFunction::constant(1.0, level);
  require(index.interval.level <= level - 1,
          "Haar interval at level " + std::to_string(index.interval.level) +
              " is too deep for resolution " + std::to_string(level));
  std::vector<double> values(std::size_t{1} << level, 0.0);
  const double height = std::pow(2.0, index.interval.level / 2.0);  // 2^(n/2)
  auto [first, count] = cell_range(index.interval, level);
  for (std::int64_t i = 0; i < count; ++i) {
    values[static_cast<std::size_t>(first + i)] =
        (i < count / 2) ? height : -height;
  }
  return StepFunction(level, std::move(values));
}

double haar_function_norm(const HaarIndex& index, double p,
                          const DyadicWeight& weight) {
  require(p >= 1.0, "lp exponent must satisfy p >= 1");
  if (index.root)
    return std::pow(weight.interval_mass(DyadicInterval::root()), 1.0 / p);
  const double mass = weight.interval_mass(index.interval);
  return std::pow(mass, 1.0 / p) / std::sqrt(index.interval.measure());
}

HaarExpansion::HaarExpansion(int level)
    : level_(level), coefficients_(haar_universe_size(level), 0.0) {}

HaarExpansion::HaarExpansion(int level, std::vector<double> coefficients)
    : level_(level), coefficients_(std::move(coefficients)) {
  require(coefficients_.size() == haar_universe_size(level),
          "expansion at level " + std::to_string(level) + " needs " +
              std::to_string(haar_universe_size(level)) + " coefficients");
}

double HaarExpansion::coefficient(const HaarIndex& index) const {
  const std::size_t ordinal = haar_ordinal(index);
  require(ordinal < coefficients_.size(),
          "Haar index " + index.key() + " outside the level-" +
              std::to_string(level_) + " universe");
  return coefficients_[ordinal];
}

void HaarExpansion::set_coefficient(const HaarIndex& index, double value) {
  const std::size_t ordinal = haar_ordinal(index);
  require(ordinal < coefficients_.size(),
          "Haar index " + index.key() + " outside the level-" +
              std::to_string(level_) + " universe");
  coefficients_[ordinal] = value;
}

HaarExpansion analyze(const StepFunction& f) {
  const int level = f.level();
  // Bottom-up interval integrals, then each coefficient is a scaled
  // difference of the two child integrals.
  std::vector<double> integrals(f.num_cells());
  const double cell_measure = std::ldexp(1.0, -level);
  for (std::size_t k = 0; k < f.num_cells(); ++k)
    integrals[k] = f.value(k) * cell_measure;

  std::vector<double> coefficients(haar_universe_size(level), 0.0);
  for (int n = level - 1; n >= 0; --n) {
    const std::size_t row = std::size_t{1} << n;
    const double height = std::pow(2.0, n / 2.0);
    for (std::size_t j = 0; j < row; ++j) {
      const double left = integrals[2 * j];
      const double right = integrals[2 * j + 1];
      coefficients[row + j] = height * (left - right);
      integrals[j] = left + right;
    }
  }
  coefficients[0] = integrals[0];
  return HaarExpansion(level, std::move(coefficients));
}

StepFunction synthesize(const HaarExpansion& expansion) {
  const int level = expansion.level();
  const auto coeffs = expansion.coefficients();
  std::vector<double> values(std::size_t{1} << level);
  values[0] = coeffs[0];
  for (int n = 0; n <= level - 1; ++n) {
    const std::size_t row = std::size_t{1} << n;
    const double height = std::pow(2.0, n / 2.0);
    // Expand in place from the back so the level-n values are not clobbered.
    for (std::size_t j = row; j-- > 0;) {
      const double base = values[j];
      const double bump = coeffs[row + j] * height;
      values[2 * j] = base + bump;
      values[2 * j + 1] = base - bump;
    }
  }
  return StepFunction(level, std::move(values));
}

double coefficient_weighted_norm(const HaarExpansion& expansion,
                                 const HaarIndex& index, double p,
                                 const DyadicWeight& weight) {
  return std::abs(expansion.coefficient(index)) *
         haar_function_norm(index, p, weight);
}

StepFunction square_function(const HaarExpansion& expansion) {
  const int level = expansion.level();
  const auto coeffs = expansion.coefficients();
  // chi_I / |I| is 2^n on all of I, so both children inherit the parent's
  // partial sum plus the parent coefficient's contribution.
  std::vector<double> sums(std::size_t{1} << level);
  sums[0] = coeffs[0] * coeffs[0];
  for (int n = 0; n <= level - 1; ++n) {
    const std::size_t row = std::size_t{1} << n;
    const double density = std::ldexp(1.0, n);  // 2^n
    for (std::size_t j = row; j-- > 0;) {
      const double c = coeffs[row + j];
      const double total = sums[j] + c * c * density;
      sums[2 * j] = total;
      sums[2 * j + 1] = total;
    }
  }
  for (double& v : sums) v = std::sqrt(v);
  return StepFunction(level, std::move(sums));
}

double xp_norm(const HaarExpansion& expansion, double p,
               const DyadicWeight& weight) {
  return weighted_lp_norm(square_function(expansion), p, weight.base());
}

double indicator_sum_norm(std::span<const HaarIndex> lambda, double p,
                          const DyadicWeight& weight, int level,
                          std::span<const int> signs) {
  require(signs.empty() || signs.size() == lambda.size(),
          "sign list must match the index list");
  HaarExpansion expansion(level);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const double sign = signs.empty() ? 1.0 : static_cast<double>(signs[i]);
    expansion.set_coefficient(
        lambda[i], sign / haar_function_norm(lambda[i], p, weight));
  }
  return xp_norm(expansion, p, weight);
}

}  // namespace greedykit

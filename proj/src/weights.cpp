#include "greedykit/weights.hpp"

#include <algorithm>
#include <cmath>

namespace greedykit {

using detail::require;

namespace {

// sums[n][j] = integral of f over interval (n, j), for n = 0..f.level().
std::vector<std::vector<double>> interval_sums(const StepFunction& f) {
  const int level = f.level();
  std::vector<std::vector<double>> sums(static_cast<std::size_t>(level) + 1);
  auto& leaves = sums[static_cast<std::size_t>(level)];
  leaves.resize(f.num_cells());
  const double cell_measure = std::ldexp(1.0, -level);
  for (std::size_t k = 0; k < f.num_cells(); ++k)
    leaves[k] = f.value(k) * cell_measure;
  for (int n = level - 1; n >= 0; --n) {
    const auto& fine = sums[static_cast<std::size_t>(n) + 1];
    auto& coarse = sums[static_cast<std::size_t>(n)];
    coarse.resize(fine.size() / 2);
    for (std::size_t j = 0; j < coarse.size(); ++j)
      coarse[j] = fine[2 * j] + fine[2 * j + 1];
  }
  return sums;
}

}  // namespace

DyadicWeight::DyadicWeight(StepFunction base) : base_(std::move(base)) {
  require(base_.min_value() > 0.0, "weight values must be strictly positive");
  sums_ = interval_sums(base_);
}

double DyadicWeight::interval_mass(const DyadicInterval& interval) const {
  require(interval.level <= level(),
          "interval at level " + std::to_string(interval.level) +
              " is deeper than the weight resolution " +
              std::to_string(level()));
  return sums_[static_cast<std::size_t>(interval.level)]
              [static_cast<std::size_t>(interval.position)];
}

double DyadicWeight::interval_mean(const DyadicInterval& interval) const {
  return std::ldexp(interval_mass(interval), interval.level);
}

double weight_of_interval(const DyadicWeight& weight,
                          const DyadicInterval& interval) {
  return weight.interval_mass(interval);
}

IndexedSequence::IndexedSequence(int max_level,
                                 std::vector<std::vector<double>> entries)
    : max_level_(max_level), entries_(std::move(entries)) {
  require(max_level >= 0 && max_level <= kMaxLevel,
          "sequence level out of range");
  require(entries_.size() == static_cast<std::size_t>(max_level) + 1,
          "sequence must cover every level 0.." + std::to_string(max_level));
  for (int n = 0; n <= max_level; ++n) {
    const auto& row = entries_[static_cast<std::size_t>(n)];
    require(row.size() == (std::size_t{1} << n),
            "sequence level " + std::to_string(n) + " must have " +
                std::to_string(std::size_t{1} << n) + " entries");
    for (double v : row)
      require(v > 0.0, "sequence entries must be strictly positive");
  }
}

IndexedSequence IndexedSequence::constant(int max_level, double value) {
  std::vector<std::vector<double>> entries;
  for (int n = 0; n <= max_level; ++n)
    entries.emplace_back(std::size_t{1} << n, value);
  return IndexedSequence(max_level, std::move(entries));
}

IndexedSequence IndexedSequence::from_function(
    int max_level, const std::function<double(const DyadicInterval&)>& f) {
  std::vector<std::vector<double>> entries;
  for (int n = 0; n <= max_level; ++n) {
    std::vector<double> row(std::size_t{1} << n);
    for (std::int64_t j = 0; j < (std::int64_t{1} << n); ++j)
      row[static_cast<std::size_t>(j)] = f(DyadicInterval{n, j});
    entries.push_back(std::move(row));
  }
  return IndexedSequence(max_level, std::move(entries));
}

IndexedSequence IndexedSequence::interval_masses(const DyadicWeight& weight,
                                                 int max_level) {
  require(max_level <= weight.level(),
          "sequence level exceeds the weight resolution");
  return from_function(max_level, [&](const DyadicInterval& iv) {
    return weight.interval_mass(iv);
  });
}

double IndexedSequence::at(const DyadicInterval& interval) const {
  require(interval.level <= max_level_,
          "interval outside the sequence domain: " + interval.key());
  return entries_[static_cast<std::size_t>(interval.level)]
                 [static_cast<std::size_t>(interval.position)];
}

double IndexedSequence::min_entry() const {
  double m = entries_[0][0];
  for (const auto& row : entries_)
    for (double v : row) m = std::min(m, v);
  return m;
}

double IndexedSequence::max_entry() const {
  double m = entries_[0][0];
  for (const auto& row : entries_)
    for (double v : row) m = std::max(m, v);
  return m;
}

std::map<std::string, double> IndexedSequence::as_key_map() const {
  std::map<std::string, double> map;
  for (int n = 0; n <= max_level_; ++n)
    for (std::int64_t j = 0; j < (std::int64_t{1} << n); ++j)
      map[DyadicInterval{n, j}.key()] =
          entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
  return map;
}

IndexedSequence IndexedSequence::from_key_map(
    const std::map<std::string, double>& map) {
  require(!map.empty(), "sequence map is empty");
  int max_level = 0;
  for (const auto& [key, value] : map) {
    (void)value;
    max_level = std::max(max_level, DyadicInterval::from_key(key).level);
  }
  std::vector<std::vector<double>> entries;
  for (int n = 0; n <= max_level; ++n)
    entries.emplace_back(std::size_t{1} << n, 0.0);
  for (const auto& [key, value] : map) {
    const DyadicInterval iv = DyadicInterval::from_key(key);
    entries[static_cast<std::size_t>(iv.level)]
           [static_cast<std::size_t>(iv.position)] = value;
  }
  for (int n = 0; n <= max_level; ++n)
    for (double v : entries[static_cast<std::size_t>(n)])
      require(v > 0.0,
              "sequence map must cover the full dyadic tree up to level " +
                  std::to_string(max_level) + " with positive entries");
  return IndexedSequence(max_level, std::move(entries));
}

double apd_constant(const DyadicWeight& weight, double p, int max_level) {
  require(p > 1.0, "A_p exponent must satisfy p > 1");
  require(max_level >= 0 && max_level <= weight.level(),
          "level exceeds the weight resolution");
  const DyadicWeight dual(abs_pow(weight.base(), -1.0 / (p - 1.0)));
  double best = 0.0;
  for (int n = 0; n <= max_level; ++n) {
    for (std::int64_t j = 0; j < (std::int64_t{1} << n); ++j) {
      const DyadicInterval iv{n, j};
      const double candidate =
          weight.interval_mean(iv) * std::pow(dual.interval_mean(iv), p - 1.0);
      best = std::max(best, candidate);
    }
  }
  return best;
}

double reverse_doubling_delta(const DyadicWeight& weight, int max_level) {
  require(max_level >= 1, "reverse doubling needs at least one split level");
  require(max_level <= weight.level(), "level exceeds the weight resolution");
  double best = 0.0;
  for (int n = 0; n <= max_level - 1; ++n) {
    for (std::int64_t j = 0; j < (std::int64_t{1} << n); ++j) {
      const DyadicInterval iv{n, j};
      const double parent_mass = weight.interval_mass(iv);
      best = std::max(best, weight.interval_mass(iv.left_child()) / parent_mass);
      best = std::max(best, weight.interval_mass(iv.right_child()) / parent_mass);
    }
  }
  return best;
}

namespace {

// Depth-first walk over the tree maintaining the ancestor-chain sum of
// w_I^(-alpha); calls visit(J, chain_sum) for every J with level <= max_level.
template <typename Mass, typename Visit>
void walk_chains(int max_level, double alpha, const Mass& mass,
                 const Visit& visit, const DyadicInterval& node,
                 double chain_sum) {
  chain_sum += std::pow(mass(node), -alpha);
  visit(node, chain_sum);
  if (node.level == max_level) return;
  walk_chains(max_level, alpha, mass, visit, node.left_child(), chain_sum);
  walk_chains(max_level, alpha, mass, visit, node.right_child(), chain_sum);
}

}  // namespace

double carleson_constant(const DyadicWeight& weight, double alpha,
                         int max_level) {
  require(alpha > 0.0, "Carleson order must satisfy alpha > 0");
  require(max_level >= 0 && max_level <= weight.level(),
          "level exceeds the weight resolution");
  double best = 0.0;
  walk_chains(
      max_level, alpha,
      [&](const DyadicInterval& iv) { return weight.interval_mass(iv); },
      [&](const DyadicInterval& iv, double chain_sum) {
        best = std::max(
            best, std::pow(weight.interval_mass(iv), alpha) * chain_sum);
      },
      DyadicInterval::root(), 0.0);
  return best;
}

double pair_drcc_constant(const IndexedSequence& w, const IndexedSequence& v,
                          double alpha, int max_level) {
  require(alpha > 0.0, "order must satisfy alpha > 0");
  require(w.max_level() == v.max_level(),
          "sequences must cover the same dyadic tree");
  require(max_level <= w.max_level(), "level exceeds the sequence domain");
  double best = 0.0;
  walk_chains(
      max_level, alpha, [&](const DyadicInterval& iv) { return w.at(iv); },
      [&](const DyadicInterval& iv, double chain_sum) {
        best = std::max(best, std::pow(v.at(iv), alpha) * chain_sum);
      },
      DyadicInterval::root(), 0.0);
  return best;
}

StepFunction random_weight(int level, double spread, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(-spread, spread);
  std::vector<double> values(std::size_t{1} << level);
  for (double& v : values) v = std::exp(uniform(rng));
  return StepFunction(level, std::move(values));
}

StepFunction power_weight(int level, double exponent) {
  const double floor_value = std::pow(std::ldexp(1.0, -level - 1), exponent);
  std::vector<double> values(std::size_t{1} << level);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double midpoint = std::ldexp(2.0 * static_cast<double>(k) + 1.0, -level - 1);
    const double sample = std::pow(midpoint, exponent);
    values[k] = (k == 0) ? std::max(sample, floor_value) : sample;
  }
  return StepFunction(level, std::move(values));
}

}  // namespace greedykit

#include "greedykit/haar_suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "greedykit/basis.hpp"
#include "greedykit/greedy.hpp"
#include "greedykit/oracle.hpp"
#include "greedykit/random.hpp"

namespace greedykit {

namespace {

// Interval ordinals are 1..2^L-1; ordinal 0 is the constant function.
std::vector<int> random_interval_ordinals(int level, std::mt19937_64& rng) {
  const int count = static_cast<int>(haar_universe_size(level)) - 1;
  std::uniform_int_distribution<int> size_dist(1, count);
  auto picked = random_subset(count, size_dist(rng), rng);
  for (int& ordinal : picked) ordinal += 1;
  return picked;
}

std::vector<HaarIndex> to_haar_indices(const std::vector<int>& ordinals) {
  std::vector<HaarIndex> out;
  out.reserve(ordinals.size());
  for (int ordinal : ordinals) {
    out.push_back(haar_index_at(static_cast<std::size_t>(ordinal)));
  }
  return out;
}

void offer_ratio(LemmaCheck& check, double ratio, double tol) {
  check.checked += 1;
  check.max_ratio = std::max(check.max_ratio, ratio);
  if (ratio > 1.0 + tol) check.violations += 1;
}

}  // namespace

LemmaRatios lemma_ratios(const DyadicWeight& weight,
                         std::span<const HaarIndex> lambda, double p,
                         int level) {
  detail::require(!lambda.empty(), "lemma_ratios: family must be nonempty");
  detail::require(p > 1.0, "lemma_ratios: p must be > 1");
  detail::require(level >= 1 && level <= weight.level(),
                  "lemma_ratios: level out of range for the weight");
  for (const HaarIndex& index : lambda) {
    detail::require(!index.root, "lemma_ratios: family must be intervals");
    detail::require(index.interval.level < level,
                    "lemma_ratios: interval below the resolution");
  }

  const double card = static_cast<double>(lambda.size());
  const double card_p = std::pow(card, 1.0 / p);
  const double indicator = indicator_sum_norm(lambda, p, weight, level);

  const auto masses = IndexedSequence::interval_masses(weight, level);
  const double c_dem = carleson_constant(weight, 1.0, level);
  const double c_two_p = pair_drcc_constant(masses, masses, 2.0 / p, level);
  const double c_dem0 =
      pair_drcc_constant(masses, masses, 2.0 * (p - 1.0) / p, level);

  // With v_I = w(I) the sum of w(I)/v_I is the cardinality and the max term
  // is 1.
  LemmaRatios ratios;
  ratios.dem = card_p / (c_dem * indicator);
  ratios.two_p = indicator / (c_two_p * card_p);
  ratios.dem0 = card_p / (c_dem0 * indicator);
  return ratios;
}

bool HaarSuiteReport::ok() const {
  for (const LemmaCheck& check : lemmas) {
    if (check.violations != 0) return false;
  }
  for (const EndToEndCheck& check : end_to_end) {
    if (check.violations != 0) return false;
  }
  return true;
}

HaarSuiteReport haar_weight_suite(const DyadicWeight& weight,
                                  const HaarSuiteOptions& options) {
  const int level = weight.level();
  detail::require(level >= 1, "haar suite: weight level must be >= 1");
  detail::require(!options.p_values.empty(), "haar suite: empty p list");
  detail::require(!options.t_values.empty(), "haar suite: empty t list");
  for (double p : options.p_values) {
    detail::require(p > 1.0, "haar suite: p must be > 1");
  }
  for (double t : options.t_values) {
    detail::require(t > 0.0 && t <= 1.0, "haar suite: t must be in (0, 1]");
  }
  detail::require(options.index_weight_min > 0.0 &&
                      options.index_weight_max >= options.index_weight_min,
                  "haar suite: invalid index-weight range");
  detail::require(options.samples > 0 && options.lemma_samples > 0,
                  "haar suite: sample counts must be positive");

  HaarSuiteReport report;
  report.level = level;
  report.apd2 = apd_constant(weight, 2.0, level);
  report.reverse_doubling = reverse_doubling_delta(weight, level);
  for (double alpha : options.alpha_values) {
    report.carleson_constants.emplace_back(
        alpha, carleson_constant(weight, alpha, level));
  }
  for (int l = 1; l <= level; ++l) {
    report.carleson_by_level.push_back(carleson_constant(weight, 1.0, l));
  }

  std::mt19937_64 master(options.seed);

  // Index weights w_I: fixed at 1 for the constant function, random in the
  // configured range per interval ordinal.  One draw shared by all (p, t).
  const std::size_t universe = haar_universe_size(level);
  std::vector<double> index_weights(universe, 1.0);
  {
    std::mt19937_64 rng(master());
    std::uniform_real_distribution<double> dist(options.index_weight_min,
                                                options.index_weight_max);
    for (std::size_t ordinal = 1; ordinal < universe; ++ordinal) {
      index_weights[ordinal] = dist(rng);
    }
  }

  // Interval-sum checks on fresh random weights (sample 0 reuses the supplied
  // weight) plus the two-sided cardinality squeeze on the supplied weight.
  for (double p : options.p_values) {
    LemmaCheck dem{"indicator-lower", p, 0, 0, 0.0};
    LemmaCheck two_p{"indicator-upper", p, 0, 0, 0.0};
    LemmaCheck dem0{"indicator-dual", p, 0, 0, 0.0};
    LemmaCheck squeeze{"cardinality-squeeze", p, 0, 0, 0.0};

    const double c_dem = carleson_constant(weight, 1.0, level);
    const auto masses = IndexedSequence::interval_masses(weight, level);
    const double c_two_p = pair_drcc_constant(masses, masses, 2.0 / p, level);
    const double squeeze_k = c_dem * c_two_p;

    std::mt19937_64 rng(master());
    for (int sample = 0; sample < options.lemma_samples; ++sample) {
      const DyadicWeight fresh(random_weight(level, 1.0, rng));
      const DyadicWeight& sample_weight = (sample == 0) ? weight : fresh;
      const auto lambda = to_haar_indices(random_interval_ordinals(level, rng));

      const auto ratios = lemma_ratios(sample_weight, lambda, p, level);
      offer_ratio(dem, ratios.dem, options.tol);
      offer_ratio(two_p, ratios.two_p, options.tol);
      offer_ratio(dem0, ratios.dem0, options.tol);

      const double card_p =
          std::pow(static_cast<double>(lambda.size()), 1.0 / p);
      const double q =
          indicator_sum_norm(lambda, p, weight, level) / card_p;
      offer_ratio(squeeze, std::max(q / squeeze_k, 1.0 / (q * squeeze_k)),
                  options.tol);
    }

    report.lemmas.push_back(dem);
    report.lemmas.push_back(two_p);
    report.lemmas.push_back(dem0);
    report.lemmas.push_back(squeeze);
  }

  // End-to-end thresholding bound on the supplied weight.
  const double m0 = *std::min_element(index_weights.begin() + 1,
                                      index_weights.end());
  const double big_m0 = *std::max_element(index_weights.begin() + 1,
                                          index_weights.end());
  for (double p : options.p_values) {
    const double c = carleson_constant(weight, std::min(1.0, 2.0 / p), level);
    const auto basis = make_haar_basis(p, weight, level, index_weights);
    const int dimension = basis->dimension();

    for (double t : options.t_values) {
      EndToEndCheck check;
      check.p = p;
      check.t = t;
      check.constant = 1.0 + c * c * big_m0 / (t * m0);

      std::mt19937_64 rng(master());
      std::uniform_int_distribution<int> m_dist(1, dimension - 1);
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      const double guard = 10.0 * options.tol;

      for (int sample = 0; sample < options.samples; ++sample) {
        Element f = random_element(basis, rng);
        f.coefficients[0] = 0.0;  // keep the data inside the interval span
        if (f.norm() < guard) continue;

        const int m = m_dist(rng);
        auto greedy_sets = sample_t_greedy_sets(f, t, m, 4, rng);
        if (greedy_sets.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0,
                                                        greedy_sets.size() - 1);
        const auto& gamma = greedy_sets[pick(rng)];
        const double budget = support_weight(*basis, gamma);

        // Competitor family: interval ordinals filling the w-budget.
        std::vector<int> pool(static_cast<std::size_t>(dimension) - 1);
        for (std::size_t i = 0; i < pool.size(); ++i) {
          pool[i] = static_cast<int>(i) + 1;
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> lambda;
        double used = 0.0;
        for (int ordinal : pool) {
          const double w = basis->index_weight(ordinal);
          if (used + w > budget) continue;
          if (coin(rng) > 0.85) continue;
          lambda.push_back(ordinal);
          used += w;
        }
        std::sort(lambda.begin(), lambda.end());

        const double lhs = greedy_residual_norm(f, gamma);
        double competitor_norm = f.norm();
        if (!lambda.empty()) {
          SignedIndicator family{lambda, random_signs(lambda.size(), rng),
                                 1.0};
          const Element indicator = indicator_element(basis, family);
          const ScalarFit fit = best_scalar(f, indicator, options.tol);
          competitor_norm = fit.distance;
        }

        check.checked += 1;
        if (lhs > check.constant * competitor_norm + guard * (1.0 + lhs)) {
          check.violations += 1;
        }
        if (competitor_norm >= guard) {
          const double ratio = lhs / (check.constant * competitor_norm);
          if (ratio > check.max_ratio) {
            check.max_ratio = ratio;
            check.worst = {{"sample", sample},
                           {"m", m},
                           {"gamma", gamma},
                           {"family", lambda},
                           {"residual", lhs},
                           {"competitor", competitor_norm},
                           {"ratio", ratio}};
          }
        } else {
          check.ratio_skipped += 1;
        }
      }

      report.end_to_end.push_back(check);
    }
  }

  return report;
}

StepFunction concentrated_weight(int level) {
  detail::require(level >= 1 && level <= kMaxLevel,
                  "concentrated_weight: bad level");
  std::vector<double> values(std::size_t{1} << level, 1e-6);
  values[0] = std::pow(2.0, level);
  return StepFunction(level, std::move(values));
}

nlohmann::json haar_suite_report_to_json(const HaarSuiteReport& report) {
  nlohmann::json carleson = nlohmann::json::array();
  for (const auto& [alpha, constant] : report.carleson_constants) {
    carleson.push_back({{"alpha", alpha}, {"constant", constant}});
  }
  nlohmann::json lemmas = nlohmann::json::array();
  for (const LemmaCheck& check : report.lemmas) {
    lemmas.push_back({{"name", check.name},
                      {"p", check.p},
                      {"checked", check.checked},
                      {"violations", check.violations},
                      {"max_ratio", check.max_ratio}});
  }
  nlohmann::json bounds = nlohmann::json::array();
  for (const EndToEndCheck& check : report.end_to_end) {
    bounds.push_back({{"p", check.p},
                      {"t", check.t},
                      {"constant", check.constant},
                      {"checked", check.checked},
                      {"violations", check.violations},
                      {"ratio_skipped", check.ratio_skipped},
                      {"max_ratio", check.max_ratio},
                      {"worst", check.worst}});
  }
  return {{"level", report.level},
          {"apd2", report.apd2},
          {"reverse_doubling", report.reverse_doubling},
          {"carleson", carleson},
          {"carleson_by_level", report.carleson_by_level},
          {"lemmas", lemmas},
          {"end_to_end", bounds},
          {"ok", report.ok()}};
}

}  // namespace greedykit

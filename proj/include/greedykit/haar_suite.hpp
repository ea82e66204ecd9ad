#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "greedykit/haar.hpp"
#include "greedykit/weights.hpp"

namespace greedykit {

struct HaarSuiteOptions {
  std::vector<double> p_values{1.5, 2.0, 3.0};  // each must be > 1
  std::vector<double> t_values{0.5, 1.0};
  std::vector<double> alpha_values{0.5, 1.0, 2.0};  // ancestor-sum report
  int samples = 1000;       // end-to-end samples per (p, t)
  int lemma_samples = 200;  // random (weight, interval family) pairs per p
  std::uint64_t seed = 1;
  double tol = 1e-7;
  double index_weight_min = 0.5;
  double index_weight_max = 2.0;
};

/// Each ratio is lhs / (constant * rhs) for one inequality relating interval
/// sums to indicator-sum norms, evaluated at v_I := omega(I):
///  dem:   card(Lambda)^(1/p) <= C1 * indicator_sum_norm, with C1 the
///         order-1 ancestor-sum constant of omega;
///  two_p: indicator_sum_norm <= C2 * card(Lambda)^(1/p), with C2 the
///         order-2/p pair constant of the interval masses;
///  dem0:  card(Lambda)^(1/p) <= C3 * max-term * indicator_sum_norm, with C3
///         the order-2/p' pair constant, p' = p/(p-1).
/// All three are <= 1 when the inequalities hold.  Requires p > 1 (dem0 needs
/// the dual exponent) and a nonempty all-interval family.
struct LemmaRatios {
  double dem = 0.0;
  double two_p = 0.0;
  double dem0 = 0.0;
};

LemmaRatios lemma_ratios(const DyadicWeight& weight,
                         std::span<const HaarIndex> lambda, double p,
                         int level);

struct LemmaCheck {
  std::string name;
  double p = 0.0;
  int checked = 0;
  int violations = 0;
  double max_ratio = 0.0;
};

struct EndToEndCheck {
  double p = 0.0;
  double t = 0.0;
  double constant = 0.0;  // 1 + C^2 M0 / (t m0)
  int checked = 0;
  int violations = 0;
  int ratio_skipped = 0;  // denominator too small for the ratio statistic
  double max_ratio = 0.0;
  nlohmann::json worst;
};

struct HaarSuiteReport {
  int level = 0;
  double apd2 = 0.0;
  double reverse_doubling = 0.0;
  // (alpha, ancestor-sum constant) at the full level, per requested alpha.
  std::vector<std::pair<double, double>> carleson_constants;
  std::vector<double> carleson_by_level;  // order-1 constant at levels 1..L
  std::vector<LemmaCheck> lemmas;
  std::vector<EndToEndCheck> end_to_end;

  bool ok() const;
};

/// Runs the interval-sum lemma checks and the end-to-end thresholding bound
/// ||f - P_Lambda(f)|| <= (1 + C^2 M0/(t m0)) ||f - alpha 1_{eps Lambda'}||
/// on the basis built from the weight, with random index weights (w_I) in
/// the configured range, competitor families under the greedy set's
/// w-budget, and the fitted scalar alpha.
HaarSuiteReport haar_weight_suite(const DyadicWeight& weight,
                                  const HaarSuiteOptions& options);

/// Mass concentrated on the first cell: ancestor sums grow linearly with the
/// level, so the order-1 constant has no level-free bound.
StepFunction concentrated_weight(int level);

nlohmann::json haar_suite_report_to_json(const HaarSuiteReport& report);

}  // namespace greedykit

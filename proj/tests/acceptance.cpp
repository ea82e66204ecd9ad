// End-to-end acceptance runner: one line per criterion, nonzero exit when
// any of them fails.  Each check re-derives its expected values from scratch
// rather than trusting the library under test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "greedykit/basis.hpp"
#include "greedykit/dyadic.hpp"
#include "greedykit/equivalence.hpp"
#include "greedykit/estimators.hpp"
#include "greedykit/greedy.hpp"
#include "greedykit/haar.hpp"
#include "greedykit/haar_suite.hpp"
#include "greedykit/oracle.hpp"
#include "greedykit/random.hpp"
#include "greedykit/weights.hpp"

using namespace greedykit;

namespace {

int failures = 0;

void report(int number, bool pass, const std::string& text) {
  std::printf("[%s] %2d %s\n", pass ? "PASS" : "FAIL", number, text.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

StepFunction random_step(int level, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> values(std::size_t{1} << level);
  for (double& v : values) v = dist(rng);
  return StepFunction(level, std::move(values));
}

// 1. The square-function norm at p = 2 with the flat weight is the plain L2
// norm, and synthesis inverts analysis.
void criterion_transform() {
  const auto start = std::chrono::steady_clock::now();
  const int level = 8;
  const StepFunction flat = StepFunction::constant(1.0, level);
  const DyadicWeight weight(flat);
  std::mt19937_64 rng(101);
  double worst_norm = 0.0;
  double worst_cell = 0.0;
  for (int i = 0; i < 500; ++i) {
    const StepFunction f = random_step(level, rng);
    const HaarExpansion coeffs = analyze(f);
    const double via_square = xp_norm(coeffs, 2.0, weight);
    const double direct = weighted_lp_norm(f, 2.0, flat);
    worst_norm = std::max(worst_norm,
                          std::abs(via_square - direct) / (1.0 + direct));
    const StepFunction back = synthesize(coeffs);
    for (std::size_t cell = 0; cell < f.num_cells(); ++cell) {
      worst_cell =
          std::max(worst_cell, std::abs(back.value(cell) - f.value(cell)));
    }
  }
  const double elapsed = seconds_since(start);
  report(1,
         worst_norm <= 1e-9 && worst_cell <= 1e-10 && elapsed < 5.0,
         "Haar transform: square-function norm matches L2 and synthesis "
         "inverts analysis at level 8 (500 samples, norm err " +
             std::to_string(worst_norm) + ", cell err " +
             std::to_string(worst_cell) + ", " + std::to_string(elapsed) +
             " s)");
}

// 2. Disjoint equal-length intervals under the flat weight give indicator
// sums of norm exactly m^(1/p).
void criterion_indicator_norms() {
  const int level = 5;
  const DyadicWeight weight(StepFunction::constant(1.0, level));
  double worst = 0.0;
  for (double p : {1.5, 2.0, 3.0}) {
    for (int m = 1; m <= 16; ++m) {
      std::vector<HaarIndex> lambda;
      for (int j = 0; j < m; ++j) {
        lambda.push_back(HaarIndex::of(make_interval(4, j)));
      }
      const double got = indicator_sum_norm(lambda, p, weight, level);
      const double expected = std::pow(static_cast<double>(m), 1.0 / p);
      worst = std::max(worst, std::abs(got - expected) / expected);
    }
  }
  report(2, worst <= 1e-10,
         "flat-weight indicator sums over m disjoint intervals have norm "
         "m^(1/p) (rel err " +
             std::to_string(worst) + ")");
}

// 3. Flat-weight constants in closed form.
void criterion_flat_constants() {
  bool pass = true;
  std::string detail;
  for (int level = 1; level <= 10; ++level) {
    const DyadicWeight weight(StepFunction::constant(1.0, level));
    const double expected = 2.0 - std::pow(2.0, -level);
    const double got = carleson_constant(weight, 1.0, level);
    if (std::abs(got - expected) > 1e-12) {
      pass = false;
      detail = " (ancestor-sum constant off at level " +
               std::to_string(level) + ")";
    }
  }
  const DyadicWeight flat6(StepFunction::constant(1.0, 6));
  if (reverse_doubling_delta(flat6, 6) != 0.5) {
    pass = false;
    detail = " (child/parent ratio of the flat weight is not 1/2)";
  }
  for (double p : {1.5, 2.0, 3.0}) {
    if (std::abs(apd_constant(flat6, p, 6) - 1.0) > 1e-12) {
      pass = false;
      detail = " (A_p constant of the flat weight is not 1)";
    }
  }
  report(3, pass,
         "flat-weight constants: ancestor sums 2 - 2^-L, halving ratio 1/2, "
         "A_p constant 1" +
             detail);
}

// 4. The geometric-series bound on ancestor sums from the child/parent
// mass ratio.
void criterion_doubling_bound() {
  std::mt19937_64 rng(202);
  int violations = 0;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const DyadicWeight weight(random_weight(6, 1.2, rng));
    const double delta = reverse_doubling_delta(weight, 6);
    if (delta >= 1.0) continue;
    for (double alpha : {0.5, 1.0, 2.0}) {
      ++checked;
      const double bound = 1.0 / (1.0 - std::pow(delta, alpha));
      if (carleson_constant(weight, alpha, 6) > bound + 1e-9) ++violations;
    }
  }
  report(4, violations == 0 && checked == 600,
         "ancestor sums of 200 random weights stay under the geometric "
         "bound 1/(1 - delta^alpha) (" +
             std::to_string(checked) + " checks, " +
             std::to_string(violations) + " violations)");
}

// 5. Interval-sum inequalities with module-computed constants on random
// (weight, family, exponent) triples.
void criterion_lemma_suite() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(303);
  const int level = 6;
  const std::vector<double> ps{1.5, 2.0, 3.0};
  int violations = 0;
  const int triples = 200;
  for (int i = 0; i < triples; ++i) {
    const DyadicWeight weight(random_weight(level, 1.0, rng));
    std::vector<HaarIndex> lambda;
    for (std::size_t ordinal = 1; ordinal < haar_universe_size(level);
         ++ordinal) {
      if (rng() % 2 == 0) lambda.push_back(haar_index_at(ordinal));
    }
    if (lambda.empty()) lambda.push_back(haar_index_at(1 + rng() % 63));
    const double p = ps[static_cast<std::size_t>(i) % ps.size()];
    const LemmaRatios ratios = lemma_ratios(weight, lambda, p, level);
    if (ratios.dem > 1.0 + 1e-9) ++violations;
    if (ratios.two_p > 1.0 + 1e-9) ++violations;
    if (ratios.dem0 > 1.0 + 1e-9) ++violations;
  }
  const double elapsed = seconds_since(start);
  report(5, violations == 0 && elapsed < 60.0,
         "interval-sum inequalities hold with computed constants on 200 "
         "random (weight, family, p) triples (" +
             std::to_string(violations) + " violations, " +
             std::to_string(elapsed) + " s)");
}

// 6. Span oracle against the closed-form Euclidean projection; ordering and
// budget-one agreement of the two oracles.
void criterion_oracles() {
  std::mt19937_64 rng(404);
  const std::vector<std::shared_ptr<const Basis>> bases = {
      make_lp_basis(2.0, 10),
      make_haar_basis(2.0, DyadicWeight(StepFunction::constant(1.0, 3)), 3)};
  double worst_span = 0.0;
  int ordering_failures = 0;
  double worst_budget_one = 0.0;
  for (const auto& basis : bases) {
    const int n = basis->dimension();
    for (int i = 0; i < 250; ++i) {
      const Element x = random_element(basis, rng);
      std::uniform_int_distribution<int> size_dist(1, n - 1);
      const auto indices = random_subset(n, size_dist(rng), rng);
      double expected_sq = 0.0;
      std::vector<char> in_set(static_cast<std::size_t>(n), 0);
      for (int k : indices) in_set[static_cast<std::size_t>(k)] = 1;
      for (int k = 0; k < n; ++k) {
        if (!in_set[static_cast<std::size_t>(k)]) {
          const double c = x.coefficients[static_cast<std::size_t>(k)];
          expected_sq += c * c;
        }
      }
      const double expected = std::sqrt(expected_sq);
      const double got = distance_to_span(x, indices).distance;
      worst_span = std::max(worst_span, std::abs(got - expected));

      std::uniform_int_distribution<int> m_dist(1, n - 1);
      const int m = m_dist(rng);
      const double sigma_m = sigma(x, Budget::count(m)).distance;
      const double d_m = d_pcc(x, Budget::count(m)).distance;
      if (sigma_m > d_m + 1e-9 * (1.0 + d_m)) ++ordering_failures;
      const double sigma_one = sigma(x, Budget::count(1)).distance;
      const double d_one = d_pcc(x, Budget::count(1)).distance;
      worst_budget_one = std::max(worst_budget_one,
                                  std::abs(sigma_one - d_one));
    }
  }
  report(6,
         worst_span <= 1e-7 && ordering_failures == 0 &&
             worst_budget_one <= 2.0 * kDefaultOracleTol,
         "oracles: span distance matches the Euclidean projection (err " +
             std::to_string(worst_span) +
             "), span <= constant-coefficient on every draw, budget-one "
             "agreement gap " +
             std::to_string(worst_budget_one));
}

// 7. Full-threshold greedy constant of the p-norm bases is 1.
void criterion_lp_greedy() {
  double worst = 0.0;
  for (double p : {1.5, 2.0, 4.0}) {
    EstimatorOptions options;
    options.samples = 1000;
    options.seed = 505;
    options.t = 1.0;
    options.budget = BudgetMode::count;
    const auto estimate =
        estimate_greedy_constant(make_lp_basis(p, 8), options);
    worst = std::max(worst, std::abs(estimate.value - 1.0));
  }
  report(7, worst <= 1e-5,
         "p-norm bases are exactly greedy at full threshold over 1000 "
         "samples (max deviation " +
             std::to_string(worst) + ")");
}

// 8. The partial-sum basis is the negative control: projections grow
// linearly and the greedy constant climbs with the dimension.
void criterion_negative_control() {
  bool pass = true;
  std::string detail;
  for (int n : {4, 8, 16}) {
    EstimatorOptions options;
    options.samples = 300;
    options.seed = 606;
    const auto estimate =
        estimate_suppression_constant(make_summing_basis(n), options);
    if (estimate.value < n / 2.0 - 1e-9) {
      pass = false;
      detail += " (projection constant below N/2 at N=" + std::to_string(n) +
                ")";
    }
  }
  double previous = 0.0;
  for (int n : {4, 8, 12}) {
    EstimatorOptions options;
    options.samples = 150;
    options.seed = 707;
    const auto estimate =
        estimate_greedy_constant(make_summing_basis(n), options);
    if (estimate.value <= previous) {
      pass = false;
      detail += " (greedy constant not increasing at N=" + std::to_string(n) +
                ")";
    }
    previous = estimate.value;
  }
  report(8, pass,
         "partial-sum basis: projection constant >= N/2 and strictly "
         "growing greedy constant" +
             detail);
}

// 9. Membership and residual inequalities of the threshold-set reduction.
void criterion_reduction() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::shared_ptr<const Basis>> bases = {
      make_lp_basis(2.0, 6),
      make_haar_basis(2.0, DyadicWeight(StepFunction::constant(1.0, 3)), 3)};
  const std::vector<std::pair<double, double>> thresholds{
      {1.0, 1.0}, {0.5, 1.0}, {1.0, 0.5}, {0.5, 0.5}};
  bool pass = true;
  std::string detail;
  for (const auto& basis : bases) {
    for (const auto& [s, t] : thresholds) {
      Theorem3Options options;
      options.s = s;
      options.t = t;
      options.samples = 1000;
      options.seed = 808;
      const Theorem3Report result = verify_theorem3(basis, options);
      if (result.membership_a_failed != 0 ||
          result.membership_b_failed != 0 || result.two_violations != 0 ||
          result.three_violations != 0 || result.bound_violations != 0) {
        pass = false;
        detail += " (" + basis->name() + " s=" + std::to_string(s) +
                  " t=" + std::to_string(t) + ": a_fail=" +
                  std::to_string(result.membership_a_failed) + " b_fail=" +
                  std::to_string(result.membership_b_failed) + " viol=" +
                  std::to_string(result.two_violations +
                                 result.three_violations +
                                 result.bound_violations) +
                  ")";
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 300.0) {
    pass = false;
    detail += " (too slow)";
  }
  report(9, pass,
         "threshold-set reduction: all memberships hold and the fed-back "
         "constant leaves zero residual violations on 1000 samples x 8 "
         "configurations (" +
             std::to_string(elapsed) + " s)" + detail);
}

// 10. End-to-end thresholding bound on a random reverse-doubling weight.
void criterion_end_to_end() {
  std::mt19937_64 rng(909);
  const DyadicWeight weight(random_weight(6, 1.0, rng));
  HaarSuiteOptions options;
  options.samples = 1000;
  options.seed = 909;
  const HaarSuiteReport suite = haar_weight_suite(weight, options);
  int violations = 0;
  int checked = 0;
  for (const EndToEndCheck& check : suite.end_to_end) {
    violations += check.violations;
    checked += check.checked;
  }
  const bool doubling = reverse_doubling_delta(weight, 6) < 1.0;
  report(10, doubling && violations == 0 && suite.end_to_end.size() == 6,
         "weighted Haar end-to-end bound 1 + C^2 M0/(t m0) holds on a "
         "reverse-doubling weight (" +
             std::to_string(checked) + " checks across p x t, " +
             std::to_string(violations) + " violations)");
}

}  // namespace

int main() {
  criterion_transform();
  criterion_indicator_norms();
  criterion_flat_constants();
  criterion_doubling_bound();
  criterion_lemma_suite();
  criterion_oracles();
  criterion_lp_greedy();
  criterion_negative_control();
  criterion_reduction();
  criterion_end_to_end();
  if (failures == 0) {
    std::printf("all 10 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}

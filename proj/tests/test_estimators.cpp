#include <doctest.h>

#include <cmath>
#include <vector>

#include "greedykit/estimators.hpp"

using namespace greedykit;

namespace {

EstimatorOptions quick(int samples, std::uint64_t seed = 1) {
  EstimatorOptions options;
  options.samples = samples;
  options.seed = seed;
  return options;
}

}  // namespace

TEST_CASE("lp projections never grow the norm") {
  for (double p : {1.0, 2.0, 3.0}) {
    const auto estimate =
        estimate_suppression_constant(make_lp_basis(p, 6), quick(40));
    CHECK(estimate.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(estimate.samples == 40);
  }
}

TEST_CASE("summing projections blow up with the dimension") {
  double previous = 0.0;
  for (int n : {4, 8, 16}) {
    const auto estimate =
        estimate_suppression_constant(make_summing_basis(n), quick(40));
    CHECK(estimate.value >= n / 2.0 - 1e-12);
    CHECK(estimate.value > previous);
    previous = estimate.value;
  }
}

TEST_CASE("lp bases are symmetric for the largest coefficients") {
  const auto estimate =
      estimate_symmetry_largest(make_lp_basis(1.5, 8), quick(40));
  CHECK(estimate.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("estimates always reach the trivial lower bound one") {
  const std::vector<std::shared_ptr<const Basis>> bases = {
      make_lp_basis(2.0, 6), make_summing_basis(6),
      make_haar_basis(2.0, DyadicWeight(StepFunction(1, {0.5, 1.5})), 2)};
  for (const auto& basis : bases) {
    CHECK(estimate_suppression_constant(basis, quick(20)).value >=
          1.0 - 1e-9);
    CHECK(estimate_symmetry_largest(basis, quick(20)).value >= 1.0 - 1e-9);
    CHECK(estimate_democracy(basis, quick(20)).value >= 1.0 - 1e-9);
  }
}

TEST_CASE("democracy modes coincide under unit index weights") {
  const auto basis = make_lp_basis(1.5, 8);
  EstimatorOptions by_count = quick(50, 9);
  by_count.budget = BudgetMode::count;
  EstimatorOptions by_weight = quick(50, 9);
  by_weight.budget = BudgetMode::weight;
  const auto count_estimate = estimate_democracy(basis, by_count);
  const auto weight_estimate = estimate_democracy(basis, by_weight);
  CHECK(count_estimate.value == weight_estimate.value);
  CHECK(count_estimate.budget_mode == "count");
  CHECK(weight_estimate.budget_mode == "weight");
}

TEST_CASE("lp democracy stays flat") {
  const auto estimate = estimate_democracy(make_lp_basis(2.0, 8), quick(40));
  CHECK(estimate.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("greedy constant of l2 at full threshold is one") {
  EstimatorOptions options = quick(30);
  options.budget = BudgetMode::count;
  const auto estimate =
      estimate_greedy_constant(make_lp_basis(2.0, 7), options);
  CHECK(estimate.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(estimate.t == 1.0);
}

TEST_CASE("pccg never beats greedy on shared samples") {
  for (const auto& basis : {make_lp_basis(2.0, 6), make_summing_basis(6)}) {
    for (auto mode : {BudgetMode::count, BudgetMode::weight}) {
      EstimatorOptions options = quick(25, 3);
      options.budget = mode;
      options.t = 0.7;
      const GreedyEstimates both = estimate_greedy_and_pccg(basis, options);
      CHECK(both.pccg.value <= both.greedy.value * (1.0 + 1e-9) + 1e-9);
      CHECK(!both.rows.empty());
      for (const SampleRow& row : both.rows) {
        if (!std::isnan(row.ratio_sigma) && !std::isnan(row.ratio_d)) {
          CHECK(row.ratio_d <= row.ratio_sigma * (1.0 + 1e-9) + 1e-9);
          CHECK(row.sigma <= row.d + 1e-9 * (1.0 + row.d));
          CHECK(row.residual >= row.sigma - 1e-9 * (1.0 + row.sigma));
        }
      }
    }
  }
}

TEST_CASE("summing greedy constant grows with the dimension") {
  double previous = 0.0;
  for (int n : {4, 8, 12}) {
    EstimatorOptions options = quick(20, 5);
    const auto estimate =
        estimate_greedy_constant(make_summing_basis(n), options);
    CHECK(estimate.value >= n / 2.0 - 1e-9);
    CHECK(estimate.value > previous);
    previous = estimate.value;
  }
}

TEST_CASE("witnesses replay to the reported value") {
  const std::vector<std::shared_ptr<const Basis>> bases = {
      make_lp_basis(2.0, 6), make_summing_basis(6)};
  for (const auto& basis : bases) {
    for (const auto& estimate :
         {estimate_suppression_constant(basis, quick(25, 2)),
          estimate_symmetry_largest(basis, quick(25, 2)),
          estimate_democracy(basis, quick(25, 2)),
          estimate_greedy_constant(basis, quick(10, 2)),
          estimate_pccg_constant(basis, quick(10, 2))}) {
      const double replay = replay_witness(basis, estimate);
      CHECK(replay ==
            doctest::Approx(estimate.value).epsilon(1e-6));
    }
  }
}

TEST_CASE("estimates are reproducible from the seed") {
  const auto basis = make_summing_basis(8);
  const auto first = estimate_greedy_constant(basis, quick(15, 77));
  const auto second = estimate_greedy_constant(basis, quick(15, 77));
  CHECK(first.value == second.value);
  CHECK(first.witness == second.witness);
}

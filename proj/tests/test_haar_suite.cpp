#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "greedykit/haar_suite.hpp"

using namespace greedykit;

TEST_CASE("interval families obey the two-sided indicator bounds") {
  std::mt19937_64 rng(13);
  const DyadicWeight weight(random_weight(4, 1.0, rng));
  for (double p : {1.5, 2.0, 3.0}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<HaarIndex> lambda;
      for (std::size_t ordinal = 1; ordinal < haar_universe_size(4);
           ++ordinal) {
        if (rng() % 3 == 0) lambda.push_back(haar_index_at(ordinal));
      }
      if (lambda.empty()) lambda.push_back(haar_index_at(1));
      const LemmaRatios ratios = lemma_ratios(weight, lambda, p, 4);
      CHECK(ratios.dem <= 1.0 + 1e-9);
      CHECK(ratios.two_p <= 1.0 + 1e-9);
      CHECK(ratios.dem0 <= 1.0 + 1e-9);
      CHECK(ratios.dem > 0.0);
    }
  }
}

TEST_CASE("flat weight singleton family makes the bounds tight") {
  const DyadicWeight flat(StepFunction::constant(1.0, 2));
  const std::vector<HaarIndex> lambda = {HaarIndex::of(make_interval(0, 0))};
  const LemmaRatios ratios = lemma_ratios(flat, lambda, 2.0, 2);
  // One interval: indicator norm is exactly 1 = card^(1/p), so each ratio is
  // the reciprocal of its constant.
  CHECK(ratios.dem == doctest::Approx(1.0 / carleson_constant(flat, 1.0, 2)));
  CHECK(ratios.two_p > 0.0);
}

TEST_CASE("lemma ratios reject roots, empties, and p = 1") {
  const DyadicWeight flat(StepFunction::constant(1.0, 2));
  const std::vector<HaarIndex> empty;
  CHECK_THROWS_AS(lemma_ratios(flat, empty, 2.0, 2), std::invalid_argument);
  const std::vector<HaarIndex> with_root = {HaarIndex::make_root()};
  CHECK_THROWS_AS(lemma_ratios(flat, with_root, 2.0, 2),
                  std::invalid_argument);
  const std::vector<HaarIndex> ok = {HaarIndex::of(make_interval(1, 0))};
  CHECK_THROWS_AS(lemma_ratios(flat, ok, 1.0, 2), std::invalid_argument);
}

TEST_CASE("small suite passes end to end") {
  std::mt19937_64 rng(29);
  const DyadicWeight weight(random_weight(3, 1.0, rng));
  HaarSuiteOptions options;
  options.samples = 30;
  options.lemma_samples = 10;
  options.seed = 4;
  const HaarSuiteReport report = haar_weight_suite(weight, options);
  CHECK(report.ok());
  CHECK(report.level == 3);
  CHECK(report.lemmas.size() == 12);     // four checks per exponent
  CHECK(report.end_to_end.size() == 6);  // three exponents, two thresholds
  for (const EndToEndCheck& check : report.end_to_end) {
    CHECK(check.checked > 0);
    CHECK(check.violations == 0);
    CHECK(check.constant >= 1.0);
  }
  const nlohmann::json j = haar_suite_report_to_json(report);
  CHECK(j["ok"] == true);
  CHECK(j["carleson_by_level"].size() == 3);
}

TEST_CASE("random weights always satisfy reverse doubling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const DyadicWeight weight(random_weight(5, 1.0, rng));
    CHECK(reverse_doubling_delta(weight, 5) < 1.0);
  }
}

TEST_CASE("concentrated weight shows growing ancestor sums") {
  const DyadicWeight weight(concentrated_weight(6));
  // Reverse doubling fails: the heavy cell's chain keeps the full mass.
  CHECK(reverse_doubling_delta(weight, 6) == doctest::Approx(1.0));
  double previous = 0.0;
  for (int level = 1; level <= 6; ++level) {
    const double constant = carleson_constant(weight, 1.0, level);
    CHECK(constant > previous + 0.5);
    previous = constant;
  }
  CHECK(previous >= 6.0);
}

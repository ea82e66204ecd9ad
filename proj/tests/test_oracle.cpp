#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "greedykit/greedy.hpp"
#include "greedykit/oracle.hpp"
#include "greedykit/random.hpp"

using namespace greedykit;

namespace {

// Closed form in the Euclidean case: the best constant over a signed set is
// the mean of the signed coordinates.
double euclidean_pcc_distance(const std::vector<double>& coeffs,
                              const std::vector<int>& indices,
                              const std::vector<int>& signs) {
  double mean = 0.0;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    mean += signs[k] * coeffs[static_cast<std::size_t>(indices[k])];
  }
  mean /= static_cast<double>(indices.size());
  double sq = 0.0;
  std::vector<char> used(coeffs.size(), 0);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const double diff =
        coeffs[static_cast<std::size_t>(indices[k])] - signs[k] * mean;
    sq += diff * diff;
    used[static_cast<std::size_t>(indices[k])] = 1;
  }
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!used[k]) sq += coeffs[k] * coeffs[k];
  }
  return std::sqrt(sq);
}

}  // namespace

TEST_CASE("best scalar matches the inner-product formula in l2") {
  const auto basis = make_lp_basis(2.0, 4);
  const Element x = make_element(basis, {1.0, 2.0, 3.0, 4.0});
  const Element v = make_element(basis, {1.0, 1.0, 0.0, 0.0});
  const ScalarFit fit = best_scalar(x, v);
  // alpha* = <x, v>/<v, v> = 3/2.
  CHECK(fit.scalar == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(fit.distance ==
        doctest::Approx(std::sqrt(0.25 + 0.25 + 9.0 + 16.0)));
  CHECK_THROWS_AS(best_scalar(x, zero_element(basis)), std::invalid_argument);
}

TEST_CASE("span distance reproduces the orthogonal projection") {
  const auto basis = make_lp_basis(2.0, 5);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const Element x = random_element(basis, rng);
    const auto indices = random_subset(5, 2, rng);
    const SpanFit fit = distance_to_span(x, indices);
    // In l2 the best approximation from a coordinate span is the projection.
    double expected_sq = 0.0;
    for (int k = 0; k < 5; ++k) {
      if (std::find(indices.begin(), indices.end(), k) == indices.end()) {
        const double c = x.coefficients[static_cast<std::size_t>(k)];
        expected_sq += c * c;
      }
    }
    CHECK(fit.distance == doctest::Approx(std::sqrt(expected_sq)).epsilon(1e-7));
    CHECK(fit.converged);
  }
}

TEST_CASE("span distance never exceeds the plain projection residual") {
  std::mt19937_64 rng(23);
  for (const auto& basis : {make_lp_basis(1.0, 6), make_lp_basis(3.0, 6),
                            make_summing_basis(6)}) {
    for (int trial = 0; trial < 15; ++trial) {
      const Element x = random_element(basis, rng);
      const auto indices = random_subset(6, 3, rng);
      const SpanFit fit = distance_to_span(x, indices);
      CHECK(fit.distance <=
            greedy_residual_norm(x, indices) + 1e-9 * (1.0 + x.norm()));
    }
  }
}

TEST_CASE("sigma fixture: dropping the two smallest of three") {
  const auto basis = make_lp_basis(2.0, 3);
  const Element x = make_element(basis, {3.0, 2.0, 1.0});
  const ApproximationResult result = sigma(x, Budget::count(1));
  CHECK(result.distance == doctest::Approx(std::sqrt(5.0)));
  CHECK(result.indices == std::vector<int>{0});
  CHECK(result.certified);
  CHECK(result.exhaustive);
}

TEST_CASE("constant-coefficient fixture matches the closed form") {
  const auto basis = make_lp_basis(2.0, 3);
  const Element x = make_element(basis, {3.0, 2.0, 1.0});
  const ApproximationResult result = d_pcc(x, Budget::count(2));
  // Best pair is {0, 1} with alpha = 2.5: distance sqrt(0.5^2+0.5^2+1).
  CHECK(result.distance == doctest::Approx(std::sqrt(1.5)).epsilon(1e-9));
  CHECK(result.indices == std::vector<int>{0, 1});
  CHECK(result.scalar == doctest::Approx(2.5).epsilon(1e-6));
  CHECK(result.constant_coefficient);
}

TEST_CASE("constant-coefficient search covers all sign patterns") {
  const auto basis = make_lp_basis(2.0, 4);
  const Element x = make_element(basis, {2.0, -2.0, 0.1, 0.0});
  const ApproximationResult result = d_pcc(x, Budget::count(2));
  // The signed pair (+0, -1) fits both large coordinates with alpha = 2.
  CHECK(result.distance == doctest::Approx(0.1).epsilon(1e-6));
  CHECK(result.indices == std::vector<int>{0, 1});
  CHECK(result.signs == std::vector<int>{1, -1});
}

TEST_CASE("span error is never above the constant-coefficient error") {
  std::mt19937_64 rng(37);
  for (const auto& basis : {make_lp_basis(2.0, 6), make_lp_basis(1.5, 6)}) {
    for (int trial = 0; trial < 15; ++trial) {
      const Element x = random_element(basis, rng);
      for (int m : {1, 2, 4}) {
        const double s = sigma(x, Budget::count(m)).distance;
        const double d = d_pcc(x, Budget::count(m)).distance;
        CHECK(s <= d + 1e-8 * (1.0 + x.norm()));
        CHECK(d <= x.norm() + 1e-9);
      }
    }
  }
}

TEST_CASE("both oracles agree at budget one") {
  std::mt19937_64 rng(43);
  const auto basis = make_lp_basis(2.0, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const Element x = random_element(basis, rng);
    const double s = sigma(x, Budget::count(1)).distance;
    const double d = d_pcc(x, Budget::count(1)).distance;
    CHECK(s == doctest::Approx(d).epsilon(1e-7));
  }
}

TEST_CASE("exhaustive pcc matches the euclidean closed form") {
  std::mt19937_64 rng(47);
  const auto basis = make_lp_basis(2.0, 6);
  for (int trial = 0; trial < 10; ++trial) {
    const Element x = random_element(basis, rng);
    const ApproximationResult result = d_pcc(x, Budget::count(2));
    double best = x.norm();
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        for (int sign : {1, -1}) {
          best = std::min(best, euclidean_pcc_distance(
                                    x.coefficients, {a, b}, {1, sign}));
        }
      }
    }
    CHECK(result.distance == doctest::Approx(best).epsilon(1e-6));
  }
}

TEST_CASE("weight budgets restrict the admissible sets") {
  const DyadicWeight flat(StepFunction::constant(1.0, 1));
  const auto basis = make_haar_basis(2.0, flat, 1, {1.0, 3.0});
  const Element x = make_element(basis, {1.0, 2.0});

  // Budget 1 only admits {0}; budget 4 admits everything.
  const ApproximationResult tight = sigma(x, Budget::weight(1.0));
  CHECK(tight.indices == std::vector<int>{0});
  CHECK(tight.distance == doctest::Approx(2.0));
  const ApproximationResult loose = sigma(x, Budget::weight(4.0));
  CHECK(loose.distance == doctest::Approx(0.0));

  const ApproximationResult pcc_tight = d_pcc(x, Budget::weight(1.0));
  CHECK(pcc_tight.distance == doctest::Approx(2.0));
}

TEST_CASE("count budgets beyond the support zero out the error") {
  const auto basis = make_lp_basis(2.0, 5);
  const Element x = make_element(basis, {1.0, 0.0, 2.0, 0.0, 0.0});
  CHECK(sigma(x, Budget::count(2)).distance == doctest::Approx(0.0));
  CHECK(sigma(x, Budget::count(4)).distance == doctest::Approx(0.0));
  OracleOptions widen;
  widen.widen = true;
  const ApproximationResult wide = sigma(x, Budget::count(4), widen);
  CHECK(wide.distance == doctest::Approx(0.0));
  CHECK(wide.indices.size() == 4);
}

TEST_CASE("sampled oracles upper-bound the exhaustive values") {
  std::mt19937_64 rng(53);
  const auto basis = make_lp_basis(2.0, 8);
  for (int trial = 0; trial < 6; ++trial) {
    const Element x = random_element(basis, rng);
    const Budget budget = Budget::count(3);
    const double exact_sigma = sigma(x, budget).distance;
    const double exact_d = d_pcc(x, budget).distance;
    const ApproximationResult ss = sampled_sigma(x, budget, 20, rng);
    const ApproximationResult sd = sampled_d_pcc(x, budget, 20, rng);
    CHECK(ss.distance >= exact_sigma - 1e-9);
    CHECK(sd.distance >= exact_d - 1e-9);
    CHECK_FALSE(ss.exhaustive);
    CHECK_FALSE(sd.exhaustive);
  }
}

TEST_CASE("upper-bound labeling follows norm smoothness") {
  const auto l1 = make_lp_basis(1.0, 4);
  const Element x = make_element(l1, {3.0, 2.0, 1.0, 0.5});
  CHECK_FALSE(sigma(x, Budget::count(2)).certified);
  const auto l2 = make_lp_basis(2.0, 4);
  CHECK(sigma(make_element(l2, x.coefficients), Budget::count(2)).certified);
}

TEST_CASE("oracle rejects malformed budgets and oversized pools") {
  const auto basis = make_lp_basis(2.0, 4);
  const Element x = make_element(basis, {1.0, 2.0, 3.0, 4.0});
  CHECK_THROWS_AS(sigma(x, Budget::count(-1)), std::invalid_argument);
  CHECK_THROWS_AS(sigma(x, Budget::weight(-2.0)), std::invalid_argument);

  const auto big = make_lp_basis(2.0, 30);
  std::vector<double> coeffs(30, 1.0);
  OracleOptions widen;
  widen.widen = true;
  CHECK_THROWS_AS(sigma(make_element(big, coeffs), Budget::count(2), widen),
                  std::invalid_argument);
}

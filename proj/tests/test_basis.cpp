#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "greedykit/basis.hpp"
#include "greedykit/random.hpp"

using namespace greedykit;

namespace {

std::vector<std::shared_ptr<const Basis>> sample_bases() {
  return {
      make_lp_basis(1.0, 5),
      make_lp_basis(2.0, 6),
      make_lp_basis(3.5, 4),
      make_summing_basis(6),
      make_haar_basis(2.0, DyadicWeight(StepFunction(2, {1.0, 2.0, 0.5, 1.0})),
                      3),
      make_haar_basis(1.5, DyadicWeight(StepFunction::constant(1.0, 1)), 2),
  };
}

}  // namespace

TEST_CASE("every basis vector has norm one") {
  for (const auto& basis : sample_bases()) {
    for (int k = 0; k < basis->dimension(); ++k) {
      CHECK(unit_element(basis, k).norm() == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("norms satisfy the vector space axioms on random data") {
  std::mt19937_64 rng(7);
  for (const auto& basis : sample_bases()) {
    for (int trial = 0; trial < 25; ++trial) {
      const Element x = random_element(basis, rng);
      const Element y = random_element(basis, rng);
      const double nx = x.norm();
      CHECK(nx >= 0.0);
      CHECK(add(x, y).norm() <= nx + y.norm() + 1e-12);
      CHECK(scale(x, -2.5).norm() == doctest::Approx(2.5 * nx));
      if (nx > 1e-12) {
        CHECK(scale(x, 1.0 / nx).norm() == doctest::Approx(1.0));
      }
    }
  }
}

TEST_CASE("zero element has zero norm and empty support") {
  for (const auto& basis : sample_bases()) {
    const Element zero = zero_element(basis);
    CHECK(zero.norm() == 0.0);
    CHECK(zero.support().empty());
  }
}

TEST_CASE("lp norms match hand computations") {
  const auto l1 = make_lp_basis(1.0, 3);
  const auto l2 = make_lp_basis(2.0, 3);
  CHECK(make_element(l1, {1.0, -2.0, 3.0}).norm() == doctest::Approx(6.0));
  CHECK(make_element(l2, {3.0, 4.0, 0.0}).norm() == doctest::Approx(5.0));
  CHECK(l2->name() == "lp:2:3");
}

TEST_CASE("summing norm tracks the largest partial sum") {
  const auto basis = make_summing_basis(4);
  CHECK(make_element(basis, {1.0, -1.0, 1.0, -1.0}).norm() ==
        doctest::Approx(1.0));
  CHECK(make_element(basis, {1.0, 1.0, 1.0, 1.0}).norm() ==
        doctest::Approx(4.0));
  CHECK(make_element(basis, {-2.0, 1.0, 0.5, 0.0}).norm() ==
        doctest::Approx(2.0));
  // The norm sees cancellation, so it is not unconditional.
  CHECK(make_element(basis, {1.0, -1.0, 1.0, -1.0}).norm() <
        make_element(basis, {1.0, 1.0, 1.0, 1.0}).norm());
}

TEST_CASE("haar basis with flat weight at p = 2 is Euclidean") {
  const auto haar =
      make_haar_basis(2.0, DyadicWeight(StepFunction::constant(1.0, 3)), 3);
  const auto l2 = make_lp_basis(2.0, haar->dimension());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Element x = random_element(haar, rng);
    const Element same = make_element(l2, x.coefficients);
    CHECK(x.norm() == doctest::Approx(same.norm()));
  }
}

TEST_CASE("haar norm is unconditional in the coefficient signs") {
  const auto basis = make_haar_basis(
      1.5, DyadicWeight(StepFunction(2, {0.3, 1.0, 2.0, 0.7})), 3);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Element x = random_element(basis, rng);
    const double before = x.norm();
    const auto signs = random_signs(x.coefficients.size(), rng);
    for (std::size_t k = 0; k < x.coefficients.size(); ++k) {
      x.coefficients[k] *= signs[k];
    }
    CHECK(x.norm() == doctest::Approx(before));
  }
}

TEST_CASE("element arithmetic rejects mismatched bases") {
  const auto a = make_lp_basis(2.0, 3);
  const auto b = make_lp_basis(2.0, 4);
  CHECK_THROWS_AS(add(make_element(a, {1, 0, 0}), make_element(b, {1, 0, 0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_element(a, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("indicator elements validate their index and sign lists") {
  const auto basis = make_lp_basis(2.0, 4);
  const Element plus = indicator_element(basis, std::vector<int>{0, 2});
  CHECK(plus.coefficients == std::vector<double>{1.0, 0.0, 1.0, 0.0});

  SignedIndicator mixed{{1, 3}, {1, -1}, 2.0};
  const Element scaled = indicator_element(basis, mixed);
  CHECK(scaled.coefficients == std::vector<double>{0.0, 2.0, 0.0, -2.0});

  SignedIndicator dup{{1, 1}, {1, 1}, 1.0};
  CHECK_THROWS_AS(indicator_element(basis, dup), std::invalid_argument);
  SignedIndicator bad_sign{{0}, {2}, 1.0};
  CHECK_THROWS_AS(indicator_element(basis, bad_sign), std::invalid_argument);
  SignedIndicator out_of_range{{7}, {1}, 1.0};
  CHECK_THROWS_AS(indicator_element(basis, out_of_range),
                  std::invalid_argument);
}

TEST_CASE("index weights must be positive and sized to the dimension") {
  CHECK_THROWS_AS(
      make_haar_basis(2.0, DyadicWeight(StepFunction::constant(1.0, 1)), 1,
                      {1.0, -1.0}),
      std::invalid_argument);
  const auto weighted = make_haar_basis(
      2.0, DyadicWeight(StepFunction::constant(1.0, 1)), 1, {0.5, 3.0});
  CHECK(weighted->index_weight(0) == 0.5);
  CHECK(weighted->index_weight(1) == 3.0);
  CHECK_THROWS_AS((void)weighted->index_weight(2), std::invalid_argument);
}

TEST_CASE("basis specs expose exponent and dimension") {
  const auto lp = std::dynamic_pointer_cast<const CanonicalLpBasis>(
      make_lp_basis(3.0, 5));
  REQUIRE(lp);
  CHECK(lp->exponent() == 3.0);
  CHECK(lp->dimension() == 5);
  CHECK_THROWS_AS(make_lp_basis(0.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_lp_basis(2.0, 0), std::invalid_argument);
}

#include "greedykit/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace greedykit {

Element random_element(const std::shared_ptr<const Basis>& basis,
                       std::mt19937_64& rng) {
  Element x = zero_element(basis);
  const int n = basis->dimension();
  std::uniform_int_distribution<int> profile(0, 2);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  switch (profile(rng)) {
    case 0: {
      for (double& c : x.coefficients) {
        c = value(rng);
      }
      break;
    }
    case 1: {
      std::uniform_int_distribution<int> size(1, std::max(1, n / 2));
      for (int index : random_subset(n, size(rng), rng)) {
        x.coefficients[static_cast<std::size_t>(index)] = value(rng);
      }
      break;
    }
    default: {
      std::uniform_real_distribution<double> ratio(0.3, 0.95);
      std::uniform_int_distribution<int> sign(0, 1);
      const double r = ratio(rng);
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      double magnitude = 1.0;
      for (int index : order) {
        x.coefficients[static_cast<std::size_t>(index)] =
            (sign(rng) ? 1.0 : -1.0) * magnitude;
        magnitude *= r;
      }
      break;
    }
  }
  return x;
}

std::vector<int> random_subset(int universe, int size, std::mt19937_64& rng) {
  detail::require(universe >= 0 && size >= 0 && size <= universe,
                  "subset size out of range");
  std::vector<int> order(static_cast<std::size_t>(universe));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(static_cast<std::size_t>(size));
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<int> random_signs(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> signs(count);
  for (int& s : signs) {
    s = coin(rng) ? 1 : -1;
  }
  return signs;
}

}  // namespace greedykit

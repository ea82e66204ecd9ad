#include "greedykit/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace greedykit {
namespace {

constexpr int kEnumerationGuard = 24;

void require_valid_set(const Element& x, std::span<const int> indices) {
  std::vector<char> seen(x.coefficients.size(), 0);
  for (int n : indices) {
    detail::require(n >= 0 && n < x.basis->dimension(),
                    "basis index out of range");
    detail::require(seen[static_cast<std::size_t>(n)] == 0,
                    "index sets must not repeat indices");
    seen[static_cast<std::size_t>(n)] = 1;
  }
}

}  // namespace

std::vector<int> greedy_ordering(const Element& x) {
  std::vector<int> order(x.coefficients.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = static_cast<int>(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(x.coefficients[static_cast<std::size_t>(a)]) >
           std::abs(x.coefficients[static_cast<std::size_t>(b)]);
  });
  return order;
}

std::vector<int> greedy_set(const Element& x, int m) {
  detail::require(m >= 0 && m <= x.basis->dimension(),
                  "greedy set size out of range");
  std::vector<int> order = greedy_ordering(x);
  order.resize(static_cast<std::size_t>(m));
  std::sort(order.begin(), order.end());
  return order;
}

Element project(const Element& x, std::span<const int> indices) {
  require_valid_set(x, indices);
  Element out = zero_element(x.basis);
  for (int n : indices) {
    out.coefficients[static_cast<std::size_t>(n)] =
        x.coefficients[static_cast<std::size_t>(n)];
  }
  return out;
}

Element greedy_approximant(const Element& x, int m) {
  const std::vector<int> gamma = greedy_set(x, m);
  return project(x, gamma);
}

double greedy_residual_norm(const Element& x, std::span<const int> gamma) {
  return subtract(x, project(x, gamma)).norm();
}

bool is_t_greedy_set(const Element& x, std::span<const int> gamma, double t) {
  detail::require(t > 0.0 && t <= 1.0, "greedy parameter t must be in (0, 1]");
  require_valid_set(x, gamma);
  std::vector<char> inside(x.coefficients.size(), 0);
  for (int n : gamma) {
    detail::require(inside[static_cast<std::size_t>(n)] == 0,
                    "greedy set indices must be distinct");
    inside[static_cast<std::size_t>(n)] = 1;
  }
  double smallest_inside = std::numeric_limits<double>::infinity();
  double largest_outside = 0.0;
  for (std::size_t i = 0; i < x.coefficients.size(); ++i) {
    const double magnitude = std::abs(x.coefficients[i]);
    if (inside[i]) {
      smallest_inside = std::min(smallest_inside, magnitude);
    } else {
      largest_outside = std::max(largest_outside, magnitude);
    }
  }
  return smallest_inside >= t * largest_outside;
}

std::vector<std::vector<int>> t_greedy_sets(const Element& x, double t, int m) {
  const int n = x.basis->dimension();
  detail::require(m >= 0 && m <= n, "greedy set size out of range");
  detail::require(n <= kEnumerationGuard,
                  "universe too large for exhaustive greedy-set enumeration; "
                  "use sample_t_greedy_sets");
  std::vector<std::vector<int>> result;
  std::vector<int> combo(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    combo[static_cast<std::size_t>(i)] = i;
  }
  while (true) {
    if (is_t_greedy_set(x, combo, t)) {
      result.push_back(combo);
    }
    if (m == 0) {
      break;
    }
    int k = m - 1;
    while (k >= 0 && combo[static_cast<std::size_t>(k)] == n - m + k) {
      --k;
    }
    if (k < 0) {
      break;
    }
    ++combo[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < m; ++j) {
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(k)] + (j - k);
    }
  }
  return result;
}

std::vector<std::vector<int>> sample_t_greedy_sets(const Element& x, double t,
                                                   int m, int max_sets,
                                                   std::mt19937_64& rng) {
  const int n = x.basis->dimension();
  detail::require(m >= 0 && m <= n, "greedy set size out of range");
  detail::require(max_sets >= 0, "max_sets must be nonnegative");
  std::set<std::vector<int>> found;
  std::vector<int> current = greedy_set(x, m);
  detail::require(is_t_greedy_set(x, current, t),
                  "tie-broken greedy set must satisfy the t-greedy condition");
  found.insert(current);
  if (m > 0 && m < n) {
    std::uniform_int_distribution<int> pick_in(0, m - 1);
    std::uniform_int_distribution<int> pick_out(0, n - m - 1);
    const int attempts = std::max(4 * max_sets, 64);
    for (int step = 0; step < attempts; ++step) {
      if (static_cast<int>(found.size()) >= max_sets) {
        break;
      }
      std::vector<int> outside;
      outside.reserve(static_cast<std::size_t>(n - m));
      std::vector<char> inside(static_cast<std::size_t>(n), 0);
      for (int idx : current) {
        inside[static_cast<std::size_t>(idx)] = 1;
      }
      for (int idx = 0; idx < n; ++idx) {
        if (!inside[static_cast<std::size_t>(idx)]) {
          outside.push_back(idx);
        }
      }
      std::vector<int> candidate = current;
      candidate[static_cast<std::size_t>(pick_in(rng))] =
          outside[static_cast<std::size_t>(pick_out(rng))];
      std::sort(candidate.begin(), candidate.end());
      if (is_t_greedy_set(x, candidate, t)) {
        current = candidate;
        found.insert(candidate);
      }
    }
  }
  std::vector<std::vector<int>> result(found.begin(), found.end());
  if (static_cast<int>(result.size()) > max_sets) {
    result.resize(static_cast<std::size_t>(max_sets));
  }
  return result;
}

double support_weight(const Basis& basis, std::span<const int> indices) {
  double total = 0.0;
  for (int n : indices) {
    total += basis.index_weight(n);
  }
  return total;
}

}  // namespace greedykit

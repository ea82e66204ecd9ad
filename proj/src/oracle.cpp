#include "greedykit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace greedykit {
namespace {

constexpr double kInvPhi = 0.6180339887498949;

double budget_slack(double value) { return 1e-12 * (1.0 + std::abs(value)); }

/// Golden-section minimization of a convex objective on [lo, hi].
template <typename F>
ScalarFit golden_min(F&& objective, double lo, double hi, double tol_width) {
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > tol_width) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = objective(d);
    }
  }
  const double mid = 0.5 * (a + b);
  return ScalarFit{mid, objective(mid)};
}

/// Minimizes ||buffer - alpha e_n|| in place; leaves the best alpha applied.
ScalarFit coordinate_fit(const Basis& basis, std::vector<double>& buffer,
                         int n, double tol) {
  const std::size_t slot = static_cast<std::size_t>(n);
  const double saved = buffer[slot];
  const double radius = 2.0 * basis.norm(buffer);
  auto objective = [&](double alpha) {
    buffer[slot] = saved - alpha;
    return basis.norm(buffer);
  };
  ScalarFit fit =
      golden_min(objective, -radius, radius, tol * (1.0 + radius));
  buffer[slot] = saved - fit.scalar;
  return fit;
}

void require_distinct_indices(const Element& x, std::span<const int> indices) {
  std::vector<char> seen(x.coefficients.size(), 0);
  for (int n : indices) {
    detail::require(n >= 0 && n < x.basis->dimension(),
                    "basis index out of range");
    detail::require(seen[static_cast<std::size_t>(n)] == 0,
                    "index sets must not repeat indices");
    seen[static_cast<std::size_t>(n)] = 1;
  }
}

template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    combo[static_cast<std::size_t>(i)] = i;
  }
  while (true) {
    visit(std::span<const int>(combo));
    if (k == 0) {
      return;
    }
    int j = k - 1;
    while (j >= 0 && combo[static_cast<std::size_t>(j)] == n - k + j) {
      --j;
    }
    if (j < 0) {
      return;
    }
    ++combo[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < k; ++i) {
      combo[static_cast<std::size_t>(i)] =
          combo[static_cast<std::size_t>(j)] + (i - j);
    }
  }
}

std::vector<int> candidate_pool(const Element& x, bool widen) {
  if (!widen) {
    return x.support();
  }
  std::vector<int> pool(static_cast<std::size_t>(x.basis->dimension()));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    pool[i] = static_cast<int>(i);
  }
  return pool;
}

int count_budget_value(const Budget& budget) {
  const double raw = budget.value;
  const int m = static_cast<int>(std::llround(raw));
  detail::require(std::abs(raw - m) < 1e-9 && m >= 0,
                  "count budgets must be nonnegative integers");
  return m;
}

struct SigmaTracker {
  double distance = std::numeric_limits<double>::infinity();
  std::vector<int> indices;
  std::vector<double> coefficients;
  bool converged = true;
  bool any = false;
};

void evaluate_span_candidate(const Element& x, std::span<const int> indices,
                             double tol, SigmaTracker& best) {
  SpanFit fit = distance_to_span(x, indices, tol);
  best.converged = best.converged && fit.converged;
  if (!best.any || fit.distance < best.distance) {
    best.any = true;
    best.distance = fit.distance;
    best.indices.assign(indices.begin(), indices.end());
    best.coefficients = fit.coefficients;
  }
}

struct PccTracker {
  double distance = std::numeric_limits<double>::infinity();
  std::vector<int> indices;
  std::vector<int> signs;
  double scalar = 0.0;
  bool any = false;
};

void try_pcc_pattern(const Element& x, const SignedIndicator& indicator,
                     double tol, PccTracker& best) {
  const Element v = indicator_element(x.basis, indicator);
  const ScalarFit fit = best_scalar(x, v, tol);
  if (!best.any || fit.distance < best.distance) {
    best.any = true;
    best.distance = fit.distance;
    best.indices = indicator.indices;
    best.signs = indicator.signs;
    best.scalar = fit.scalar;
  }
}

void evaluate_pcc_candidate(const Element& x, std::span<const int> indices,
                            double tol, PccTracker& best,
                            std::mt19937_64* rng = nullptr,
                            std::uint64_t max_patterns = 0) {
  if (indices.empty()) {
    const double distance = x.norm();
    if (!best.any || distance < best.distance) {
      best.any = true;
      best.distance = distance;
      best.indices.clear();
      best.signs.clear();
      best.scalar = 0.0;
    }
    return;
  }
  const std::size_t free_signs = indices.size() - 1;
  SignedIndicator indicator;
  indicator.indices.assign(indices.begin(), indices.end());
  indicator.signs.assign(indices.size(), 1);
  const bool exhaust =
      free_signs < 63 &&
      (max_patterns == 0 || (std::uint64_t{1} << free_signs) <= max_patterns);
  if (exhaust) {
    detail::require(free_signs < 63, "constant-coefficient set too large");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_signs);
         ++mask) {
      for (std::size_t i = 0; i < free_signs; ++i) {
        indicator.signs[i + 1] = (mask >> i) & 1 ? -1 : 1;
      }
      try_pcc_pattern(x, indicator, tol, best);
    }
    return;
  }
  detail::require(rng != nullptr,
                  "constant-coefficient set too large for exhaustive signs");
  // Sign pattern matching the coefficient signs, then random patterns.
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const double c = x.coefficients[static_cast<std::size_t>(indices[i])];
    indicator.signs[i] = c < 0.0 ? -1 : 1;
  }
  if (indicator.signs[0] == -1) {
    for (int& s : indicator.signs) {
      s = -s;
    }
  }
  try_pcc_pattern(x, indicator, tol, best);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::uint64_t draw = 1; draw < max_patterns; ++draw) {
    for (std::size_t i = 0; i < free_signs; ++i) {
      indicator.signs[i + 1] = coin(*rng) ? -1 : 1;
    }
    try_pcc_pattern(x, indicator, tol, best);
  }
}

/// Enumerates subsets of `pool` whose index weight stays within delta,
/// visiting every admissible subset (maximal_only false) or only those to
/// which no further pool index can be added (maximal_only true).
void for_each_weighted_subset(const Basis& basis, std::span<const int> pool,
                              double delta, bool maximal_only,
                              const std::function<void(std::span<const int>)>& visit) {
  const double slack = budget_slack(delta);
  std::vector<int> chosen;
  std::vector<int> excluded;
  std::function<void(std::size_t, double)> recurse = [&](std::size_t at,
                                                         double used) {
    if (at == pool.size()) {
      if (maximal_only) {
        for (int j : excluded) {
          if (used + basis.index_weight(j) <= delta + slack) {
            return;
          }
        }
      }
      visit(std::span<const int>(chosen));
      return;
    }
    const int index = pool[at];
    const double w = basis.index_weight(index);
    if (used + w <= delta + slack) {
      chosen.push_back(index);
      recurse(at + 1, used + w);
      chosen.pop_back();
    }
    excluded.push_back(index);
    recurse(at + 1, used);
    excluded.pop_back();
  };
  detail::require(delta >= 0.0, "weight budgets must be nonnegative");
  recurse(0, 0.0);
}

ApproximationResult base_result(const Element& x, Budget budget,
                                const OracleOptions& options,
                                bool constant_coefficient) {
  ApproximationResult result;
  result.budget = budget;
  result.tolerance = options.tol;
  result.constant_coefficient = constant_coefficient;
  result.certified = x.basis->smooth_norm();
  return result;
}

}  // namespace

Budget Budget::count(int m) {
  return Budget{BudgetMode::count, static_cast<double>(m)};
}

Budget Budget::weight(double delta) { return Budget{BudgetMode::weight, delta}; }

ScalarFit best_scalar(const Element& x, const Element& v, double tol) {
  detail::require(x.basis != nullptr && x.basis == v.basis,
                  "elements must share one basis object");
  detail::require(tol > 0.0, "tolerance must be positive");
  const double v_norm = v.norm();
  detail::require(v_norm > 0.0, "direction must be nonzero");
  const double x_norm = x.norm();
  if (x_norm == 0.0) {
    return ScalarFit{0.0, 0.0};
  }
  const double radius = 2.0 * x_norm / v_norm;
  std::vector<double> buffer(x.coefficients.size());
  auto objective = [&](double alpha) {
    for (std::size_t i = 0; i < buffer.size(); ++i) {
      buffer[i] = x.coefficients[i] - alpha * v.coefficients[i];
    }
    return x.basis->norm(buffer);
  };
  return golden_min(objective, -radius, radius, tol * (1.0 + radius));
}

SpanFit distance_to_span(const Element& x, std::span<const int> indices,
                         double tol, int max_sweeps) {
  detail::require(tol > 0.0, "tolerance must be positive");
  detail::require(max_sweeps > 0, "sweep cap must be positive");
  require_distinct_indices(x, indices);
  SpanFit fit;
  fit.indices.assign(indices.begin(), indices.end());
  fit.coefficients.resize(indices.size());
  std::vector<double> buffer = x.coefficients;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const std::size_t slot = static_cast<std::size_t>(indices[i]);
    fit.coefficients[i] = buffer[slot];
    buffer[slot] = 0.0;
  }
  fit.distance = x.basis->norm(buffer);
  if (indices.empty() || fit.distance == 0.0) {
    return fit;
  }
  fit.converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double previous = fit.distance;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      const int n = fit.indices[i];
      const std::size_t slot = static_cast<std::size_t>(n);
      const double incumbent = fit.coefficients[i];
      buffer[slot] += incumbent;
      const double unfitted = buffer[slot];
      const ScalarFit step = coordinate_fit(*x.basis, buffer, n, tol);
      if (step.distance <= fit.distance) {
        fit.coefficients[i] = step.scalar;
        fit.distance = step.distance;
      } else {
        // The section search stops at a bracket midpoint, which can sit a
        // hair above the incumbent; keep the incumbent so the descent is
        // monotone.
        buffer[slot] = unfitted - incumbent;
      }
    }
    fit.sweeps = sweep + 1;
    if (previous - fit.distance < tol) {
      fit.converged = true;
      break;
    }
  }
  return fit;
}

ApproximationResult sigma(const Element& x, Budget budget,
                          const OracleOptions& options) {
  ApproximationResult result = base_result(x, budget, options, false);
  const std::vector<int> pool = candidate_pool(x, options.widen);
  detail::require(static_cast<int>(pool.size()) <= options.max_pool,
                  "candidate pool exceeds the exhaustive-enumeration guard; "
                  "use the sampled mode");
  SigmaTracker best;
  if (budget.mode == BudgetMode::count) {
    const int m = count_budget_value(budget);
    detail::require(!options.widen || m <= x.basis->dimension(),
                    "count budget exceeds the universe");
    const std::vector<int> supp = x.support();
    if (static_cast<std::size_t>(m) >= supp.size()) {
      std::vector<int> candidate = supp;
      if (options.widen) {
        for (int n = 0; n < x.basis->dimension() &&
                        candidate.size() < static_cast<std::size_t>(m);
             ++n) {
          if (x.coefficients[static_cast<std::size_t>(n)] == 0.0) {
            candidate.push_back(n);
          }
        }
        std::sort(candidate.begin(), candidate.end());
      }
      result.indices = candidate;
      for (int n : candidate) {
        result.coefficients.push_back(
            x.coefficients[static_cast<std::size_t>(n)]);
      }
      result.distance = 0.0;
      return result;
    }
    for_each_combination(
        static_cast<int>(pool.size()), m, [&](std::span<const int> positions) {
          std::vector<int> candidate(positions.size());
          for (std::size_t i = 0; i < positions.size(); ++i) {
            candidate[i] = pool[static_cast<std::size_t>(positions[i])];
          }
          evaluate_span_candidate(x, candidate, options.tol, best);
        });
  } else {
    for_each_weighted_subset(*x.basis, pool, budget.value, true,
                             [&](std::span<const int> candidate) {
                               evaluate_span_candidate(x, candidate,
                                                       options.tol, best);
                             });
  }
  detail::require(best.any, "no admissible candidate set");
  result.indices = best.indices;
  result.coefficients = best.coefficients;
  result.distance = best.distance;
  result.converged = best.converged;
  return result;
}

ApproximationResult d_pcc(const Element& x, Budget budget,
                          const OracleOptions& options) {
  ApproximationResult result = base_result(x, budget, options, true);
  const std::vector<int> pool = candidate_pool(x, options.widen);
  detail::require(static_cast<int>(pool.size()) <= options.max_pool,
                  "candidate pool exceeds the exhaustive-enumeration guard; "
                  "use the sampled mode");
  PccTracker best;
  if (budget.mode == BudgetMode::count) {
    const int m = count_budget_value(budget);
    detail::require(!options.widen || m <= x.basis->dimension(),
                    "count budget exceeds the universe");
    const int effective =
        options.widen ? m : std::min(m, static_cast<int>(pool.size()));
    for_each_combination(
        static_cast<int>(pool.size()), effective,
        [&](std::span<const int> positions) {
          std::vector<int> candidate(positions.size());
          for (std::size_t i = 0; i < positions.size(); ++i) {
            candidate[i] = pool[static_cast<std::size_t>(positions[i])];
          }
          evaluate_pcc_candidate(x, candidate, options.tol, best);
        });
  } else {
    for_each_weighted_subset(*x.basis, pool, budget.value, false,
                             [&](std::span<const int> candidate) {
                               evaluate_pcc_candidate(x, candidate,
                                                      options.tol, best);
                             });
  }
  detail::require(best.any, "no admissible candidate set");
  result.indices = best.indices;
  result.signs = best.signs;
  result.scalar = best.scalar;
  result.distance = best.distance;
  return result;
}

namespace {

std::vector<int> deterministic_fill(const Element& x,
                                    std::span<const int> pool_in,
                                    const Budget& budget) {
  std::vector<int> pool(pool_in.begin(), pool_in.end());
  std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) {
    return std::abs(x.coefficients[static_cast<std::size_t>(a)]) >
           std::abs(x.coefficients[static_cast<std::size_t>(b)]);
  });
  std::vector<int> chosen;
  if (budget.mode == BudgetMode::count) {
    const int m = std::min(count_budget_value(budget),
                           static_cast<int>(pool.size()));
    chosen.assign(pool.begin(), pool.begin() + m);
  } else {
    const double slack = budget_slack(budget.value);
    double used = 0.0;
    for (int n : pool) {
      const double w = x.basis->index_weight(n);
      if (used + w <= budget.value + slack) {
        chosen.push_back(n);
        used += w;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<int> random_fill(const Element& x, std::span<const int> pool_in,
                             const Budget& budget, std::mt19937_64& rng) {
  std::vector<int> pool(pool_in.begin(), pool_in.end());
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> chosen;
  if (budget.mode == BudgetMode::count) {
    const int m = std::min(count_budget_value(budget),
                           static_cast<int>(pool.size()));
    chosen.assign(pool.begin(), pool.begin() + m);
  } else {
    const double slack = budget_slack(budget.value);
    double used = 0.0;
    for (int n : pool) {
      const double w = x.basis->index_weight(n);
      if (used + w <= budget.value + slack) {
        chosen.push_back(n);
        used += w;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

ApproximationResult sampled_sigma(const Element& x, Budget budget, int draws,
                                  std::mt19937_64& rng,
                                  const OracleOptions& options) {
  detail::require(draws > 0, "sampled mode needs at least one draw");
  ApproximationResult result = base_result(x, budget, options, false);
  result.exhaustive = false;
  const std::vector<int> pool = candidate_pool(x, options.widen);
  SigmaTracker best;
  evaluate_span_candidate(x, deterministic_fill(x, pool, budget), options.tol,
                          best);
  for (int i = 0; i < draws; ++i) {
    evaluate_span_candidate(x, random_fill(x, pool, budget, rng), options.tol,
                            best);
  }
  result.indices = best.indices;
  result.coefficients = best.coefficients;
  result.distance = best.distance;
  result.converged = best.converged;
  return result;
}

ApproximationResult sampled_d_pcc(const Element& x, Budget budget, int draws,
                                  std::mt19937_64& rng,
                                  const OracleOptions& options) {
  detail::require(draws > 0, "sampled mode needs at least one draw");
  ApproximationResult result = base_result(x, budget, options, true);
  result.exhaustive = false;
  const std::vector<int> pool = candidate_pool(x, options.widen);
  PccTracker best;
  constexpr std::uint64_t kPatternCap = 2048;
  evaluate_pcc_candidate(x, deterministic_fill(x, pool, budget), options.tol,
                         best, &rng, kPatternCap);
  for (int i = 0; i < draws; ++i) {
    evaluate_pcc_candidate(x, random_fill(x, pool, budget, rng), options.tol,
                           best, &rng, kPatternCap);
  }
  result.indices = best.indices;
  result.signs = best.signs;
  result.scalar = best.scalar;
  result.distance = best.distance;
  return result;
}

}  // namespace greedykit

#include "greedykit/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "greedykit/estimators.hpp"
#include "greedykit/greedy.hpp"
#include "greedykit/oracle.hpp"
#include "greedykit/random.hpp"

namespace greedykit {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct SampleDemands {
  double two = kNan;    // ratio that D(s) must dominate in (two)
  double three = kNan;  // same for (three)
  double bound = kNan;  // D value solving the final constant bound
  nlohmann::json detail;
};

std::vector<int> set_difference(const std::vector<int>& a,
                                const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

/// D needed so that (2 + r D) D >= c with r = (t+s)/t.
double solve_final_bound(double c, double r) {
  return (std::sqrt(1.0 + r * c) - 1.0) / r;
}

}  // namespace

Theorem3Report verify_theorem3(const std::shared_ptr<const Basis>& basis,
                               const Theorem3Options& options) {
  detail::require(options.s > 0.0 && options.s <= 1.0,
                  "parameter s must be in (0, 1]");
  detail::require(options.t > 0.0 && options.t <= 1.0,
                  "parameter t must be in (0, 1]");
  detail::require(options.samples > 0, "sample count must be positive");
  const int n = basis->dimension();
  const double tol_guard = 10.0 * options.tol;

  Theorem3Report report;
  report.basis = basis->name();
  report.s = options.s;
  report.t = options.t;
  report.samples = options.samples;

  if (options.dhat_samples > 0) {
    EstimatorOptions estimator;
    estimator.samples = options.dhat_samples;
    estimator.seed = options.seed ^ 0x9e3779b97f4a7c15ULL;
    estimator.tol = options.tol;
    estimator.t = options.s;
    estimator.budget = BudgetMode::weight;
    report.dhat_initial =
        std::max(1.0, estimate_pccg_constant(basis, estimator).value);
  }
  double dhat = report.dhat_initial;

  OracleOptions oracle_options;
  oracle_options.tol = options.tol;
  std::vector<SampleDemands> demands;
  demands.reserve(static_cast<std::size_t>(options.samples));

  std::mt19937_64 master(options.seed);
  for (int i = 0; i < options.samples; ++i) {
    const std::uint64_t sample_seed = master();
    std::mt19937_64 rng(sample_seed);
    const Element x = random_element(basis, rng);
    if (x.norm() < tol_guard) {
      ++report.skipped;
      continue;
    }
    std::uniform_int_distribution<int> pick_m(1, n);
    const int m = pick_m(rng);
    const std::vector<std::vector<int>> sets =
        sample_t_greedy_sets(x, options.t, m, 8, rng);
    std::uniform_int_distribution<std::size_t> pick_set(0, sets.size() - 1);
    const std::vector<int> gamma = sets[pick_set(rng)];
    const double gamma_weight = support_weight(*basis, gamma);

    // Competitor set under Gamma's weight budget, with random gaps.
    std::vector<int> b_set;
    {
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::uniform_real_distribution<double> keep(0.0, 1.0);
      const double slack = 1e-12 * (1.0 + gamma_weight);
      double used = 0.0;
      for (int index : order) {
        const double w = basis->index_weight(index);
        if (used + w <= gamma_weight + slack && keep(rng) < 0.85) {
          b_set.push_back(index);
          used += w;
        }
      }
      std::sort(b_set.begin(), b_set.end());
    }

    const std::vector<int> gamma_minus_b = set_difference(gamma, b_set);
    const std::vector<int> b_minus_gamma = set_difference(b_set, gamma);
    const std::vector<int> eta = random_signs(b_minus_gamma.size(), rng);
    double gamma_peak = 0.0;  // largest |coefficient| over B \ Gamma
    for (int index : b_minus_gamma) {
      gamma_peak = std::max(
          gamma_peak, std::abs(x.coefficients[static_cast<std::size_t>(index)]));
    }
    const double scaled_peak = (options.t / options.s) * gamma_peak;

    // z: a generic element supported on B.
    Element z = zero_element(basis);
    {
      std::uniform_real_distribution<double> noise(-0.5, 0.5);
      for (int index : b_set) {
        z.coefficients[static_cast<std::size_t>(index)] =
            x.coefficients[static_cast<std::size_t>(index)] + noise(rng);
      }
    }

    // (a) membership of Gamma\B among the s-greedy sets of the auxiliary
    // element; the element depends on which of t, s is larger.
    {
      Element aux = zero_element(basis);
      if (options.t >= options.s) {
        aux.coefficients = x.coefficients;
        for (int index : b_set) {
          aux.coefficients[static_cast<std::size_t>(index)] = 0.0;
        }
      } else {
        for (int index : gamma_minus_b) {
          aux.coefficients[static_cast<std::size_t>(index)] =
              x.coefficients[static_cast<std::size_t>(index)];
        }
      }
      for (std::size_t j = 0; j < b_minus_gamma.size(); ++j) {
        aux.coefficients[static_cast<std::size_t>(b_minus_gamma[j])] =
            scaled_peak * static_cast<double>(eta[j]);
      }
      ++report.membership_a_checked;
      if (!is_t_greedy_set(aux, gamma_minus_b, options.s)) {
        ++report.membership_a_failed;
      }
    }

    // (b) membership of B for y = x - z + mu 1_B.
    {
      Element y = subtract(x, z);
      double max_in = 0.0;
      double max_out = 0.0;
      std::vector<char> in_b(static_cast<std::size_t>(n), 0);
      for (int index : b_set) {
        in_b[static_cast<std::size_t>(index)] = 1;
      }
      for (int index = 0; index < n; ++index) {
        const double c = std::abs(y.coefficients[static_cast<std::size_t>(index)]);
        if (in_b[static_cast<std::size_t>(index)]) {
          max_in = std::max(max_in, c);
        } else {
          max_out = std::max(max_out, c);
        }
      }
      // Any mu >= s max_out + max_in works; the small inflation keeps the
      // shifted minimum above the threshold when rounding absorbs the
      // s max_out term into max_in.
      const double mu = (options.s * max_out + max_in) * (1.0 + 1e-9);
      for (int index : b_set) {
        y.coefficients[static_cast<std::size_t>(index)] += mu;
      }
      ++report.membership_b_checked;
      if (!is_t_greedy_set(y, b_set, options.s)) {
        ++report.membership_b_failed;
      }
    }

    SampleDemands demand;
    const double residual_b = greedy_residual_norm(x, b_set);

    // (two): t >= s compares the combined residual against ||x - P_B(x)||;
    // s > t compares the scaled indicator against ||P_{Gamma\B}(x)||.
    if (options.t >= options.s) {
      Element lhs = x;
      for (int index : gamma) {
        lhs.coefficients[static_cast<std::size_t>(index)] = 0.0;
      }
      for (int index : b_set) {
        lhs.coefficients[static_cast<std::size_t>(index)] = 0.0;
      }
      for (std::size_t j = 0; j < b_minus_gamma.size(); ++j) {
        lhs.coefficients[static_cast<std::size_t>(b_minus_gamma[j])] =
            scaled_peak * static_cast<double>(eta[j]);
      }
      const double numerator = lhs.norm();
      if (residual_b >= tol_guard) {
        demand.two = numerator / residual_b;
      } else {
        ++report.two_skipped;
      }
    } else {
      Element lhs = zero_element(basis);
      for (std::size_t j = 0; j < b_minus_gamma.size(); ++j) {
        lhs.coefficients[static_cast<std::size_t>(b_minus_gamma[j])] =
            scaled_peak * static_cast<double>(eta[j]);
      }
      const double numerator = lhs.norm();
      const double denominator = project(x, gamma_minus_b).norm();
      if (numerator < tol_guard) {
        demand.two = 0.0;
      } else if (denominator >= tol_guard) {
        demand.two = numerator / denominator;
      } else {
        ++report.two_skipped;
      }
    }

    // (three): ||x - P_B(x)|| <= D(s) ||x - z||.
    {
      const double denominator = subtract(x, z).norm();
      if (denominator >= tol_guard) {
        demand.three = residual_b / denominator;
      } else {
        ++report.three_skipped;
      }
    }

    // (d): the final constant bound on residual/sigma at Gamma's budget.
    {
      const double residual_gamma = greedy_residual_norm(x, gamma);
      const double sigma_distance =
          sigma(x, Budget::weight(gamma_weight), oracle_options).distance;
      if (sigma_distance >= tol_guard) {
        const double c_sample = residual_gamma / sigma_distance;
        if (options.s <= options.t) {
          demand.bound = std::sqrt(std::max(0.0, c_sample));
        } else {
          demand.bound = solve_final_bound(
              c_sample, (options.t + options.s) / options.t);
        }
      } else {
        ++report.bound_skipped;
      }
    }

    double top = 0.0;
    bool has_demand = false;
    for (double v : {demand.two, demand.three, demand.bound}) {
      if (!std::isnan(v)) {
        top = has_demand ? std::max(top, v) : v;
        has_demand = true;
      }
    }
    if (has_demand && top > dhat) {
      dhat = top;
      ++report.feedback_updates;
      report.worst = nlohmann::json{{"seed", sample_seed},
                                    {"coeffs", x.coefficients},
                                    {"m", m},
                                    {"gamma", gamma},
                                    {"b_set", b_set},
                                    {"eta", eta},
                                    {"z", z.coefficients},
                                    {"required", top}};
    }
    demands.push_back(std::move(demand));
  }

  report.dhat = dhat;
  const double slack = 1e-9 * (1.0 + dhat);
  for (const SampleDemands& demand : demands) {
    if (!std::isnan(demand.two)) {
      ++report.two_checked;
      if (demand.two > dhat + slack) {
        ++report.two_violations;
      }
    }
    if (!std::isnan(demand.three)) {
      ++report.three_checked;
      if (demand.three > dhat + slack) {
        ++report.three_violations;
      }
    }
    if (!std::isnan(demand.bound)) {
      ++report.bound_checked;
      if (demand.bound > dhat + slack) {
        ++report.bound_violations;
      }
    }
  }
  return report;
}

nlohmann::json theorem3_report_to_json(const Theorem3Report& report) {
  return nlohmann::json{
      {"basis", report.basis},
      {"s", report.s},
      {"t", report.t},
      {"samples", report.samples},
      {"skipped", report.skipped},
      {"membership_a",
       {{"checked", report.membership_a_checked},
        {"failed", report.membership_a_failed}}},
      {"membership_b",
       {{"checked", report.membership_b_checked},
        {"failed", report.membership_b_failed}}},
      {"dhat_initial", report.dhat_initial},
      {"dhat", report.dhat},
      {"feedback_updates", report.feedback_updates},
      {"ineq_two",
       {{"checked", report.two_checked},
        {"skipped", report.two_skipped},
        {"violations", report.two_violations}}},
      {"ineq_three",
       {{"checked", report.three_checked},
        {"skipped", report.three_skipped},
        {"violations", report.three_violations}}},
      {"final_bound",
       {{"checked", report.bound_checked},
        {"skipped", report.bound_skipped},
        {"violations", report.bound_violations}}},
      {"worst", report.worst},
      {"ok", report.ok()},
  };
}

}  // namespace greedykit

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "greedykit/basis.hpp"
#include "greedykit/oracle.hpp"
#include "greedykit/report.hpp"

namespace greedykit {

/// A certified lower bound on a basis constant: the largest ratio observed
/// over deterministic probes plus seeded random samples, with a witness
/// instance that replays to the same ratio.
struct ConstantEstimate {
  std::string name;
  std::string basis;
  double t = 1.0;
  std::string budget_mode;  // "count", "weight", or "" when not applicable
  double value = 0.0;
  nlohmann::json witness;
  int samples = 0;
  int skipped = 0;
};

nlohmann::json constant_estimate_to_json(const ConstantEstimate& estimate);

struct EstimatorOptions {
  int samples = 1000;
  std::uint64_t seed = 1;
  double tol = kDefaultOracleTol;
  double t = 1.0;                 // greedy/pccg threshold parameter
  BudgetMode budget = BudgetMode::weight;
  int max_sets_per_sample = 32;   // greedy-set enumeration cap per sample
};

/// sup ||P_A(x)|| / ||x|| over sampled (x, A).
ConstantEstimate estimate_suppression_constant(
    const std::shared_ptr<const Basis>& basis, const EstimatorOptions& options);

/// sup ||x + t 1_{eps A}|| / ||x + t 1_{eps' B}|| over sampled x and disjoint
/// equal-size A, B away from supp(x), with t the largest coefficient
/// magnitude of x.  Each configuration is evaluated in both directions.
ConstantEstimate estimate_symmetry_largest(
    const std::shared_ptr<const Basis>& basis, const EstimatorOptions& options);

/// sup ||1_A|| / ||1_B|| over sampled pairs; options.budget picks the
/// constraint: count pairs have |A| = |B|, weight pairs fill A maximally
/// under the weight budget of B (so w(A) <= w(B)).  With unit index weights
/// both modes evaluate identical pairs for a given seed.
ConstantEstimate estimate_democracy(const std::shared_ptr<const Basis>& basis,
                                    const EstimatorOptions& options);

/// Greedy and constant-coefficient efficiency on shared samples: for each
/// sampled x, size m, and t-greedy set Gamma, the residual ||x - P_Gamma(x)||
/// is compared against sigma (greedy constant) and against d_pcc (pccg
/// constant) at Gamma's budget.  One CSV row per evaluated (x, m, Gamma).
struct GreedyEstimates {
  ConstantEstimate greedy;
  ConstantEstimate pccg;
  std::vector<SampleRow> rows;
};

GreedyEstimates estimate_greedy_and_pccg(
    const std::shared_ptr<const Basis>& basis, const EstimatorOptions& options);

ConstantEstimate estimate_greedy_constant(
    const std::shared_ptr<const Basis>& basis, const EstimatorOptions& options);
ConstantEstimate estimate_pccg_constant(
    const std::shared_ptr<const Basis>& basis, const EstimatorOptions& options);

/// Recomputes the witness ratio of an estimate from scratch; the result must
/// match estimate.value to about 1e-6.
double replay_witness(const std::shared_ptr<const Basis>& basis,
                      const ConstantEstimate& estimate);

}  // namespace greedykit

#pragma once

#include <random>
#include <span>
#include <vector>

#include "greedykit/basis.hpp"

namespace greedykit {

inline constexpr double kDefaultOracleTol = 1e-7;

enum class BudgetMode { count, weight };

/// Either a cardinality budget (|A| = m) or a weight budget
/// (sum of index weights over A at most delta).
struct Budget {
  BudgetMode mode = BudgetMode::count;
  double value = 0.0;

  static Budget count(int m);
  static Budget weight(double delta);
};

struct ScalarFit {
  double scalar = 0.0;
  double distance = 0.0;
};

/// min over real alpha of ||x - alpha * v||, by golden-section search on
/// [-B, B] with B = 2||x||/||v||.  The objective is convex, so the bracket
/// always contains a global minimizer.
ScalarFit best_scalar(const Element& x, const Element& v,
                      double tol = kDefaultOracleTol);

struct SpanFit {
  std::vector<int> indices;
  std::vector<double> coefficients;  // one per index
  double distance = 0.0;
  bool converged = true;
  int sweeps = 0;
};

/// min over coefficients c of ||x - sum_{n in A} c_n e_n||, by cyclic
/// coordinate descent seeded at the projection coefficients (so the result
/// never exceeds ||x - P_A(x)||).  Stops when a full sweep improves the
/// distance by less than tol or after max_sweeps sweeps.
SpanFit distance_to_span(const Element& x, std::span<const int> indices,
                         double tol = kDefaultOracleTol, int max_sweeps = 500);

struct OracleOptions {
  double tol = kDefaultOracleTol;
  /// Enumerate subsets of the full universe instead of supp(x).  Off by
  /// default: for unconditional norms indices outside the support never help,
  /// and count budgets above |supp(x)| are truncated to |supp(x)|.
  bool widen = false;
  /// Exhaustive enumeration refuses candidate pools above this size.
  int max_pool = 24;
};

struct ApproximationResult {
  Budget budget;
  std::vector<int> indices;
  std::vector<double> coefficients;  // best-span mode: one per index
  std::vector<int> signs;            // constant-coefficient mode: one per index
  double scalar = 0.0;               // constant-coefficient mode: alpha
  double distance = 0.0;
  double tolerance = kDefaultOracleTol;
  bool constant_coefficient = false;
  /// True when the norm certifies the inner minimizations (p > 1); p = 1 and
  /// summing norms yield upper bounds.
  bool certified = true;
  bool converged = true;
  /// False for the sampled mode, which only inspects random candidate sets.
  bool exhaustive = true;
};

/// Best approximation error sigma over spans of admissible sets: exhaustive
/// over subsets of supp(x) (or of the whole universe when widened).  Weight
/// budgets only evaluate maximal admissible sets since enlarging a set never
/// increases the distance.
ApproximationResult sigma(const Element& x, Budget budget,
                          const OracleOptions& options = {});

/// Best approximation error over signed constant-coefficient candidates
/// alpha * 1_{eta A} with admissible A: exhaustive over sets and sign
/// patterns (first sign fixed +1), scalar fitted per candidate.
ApproximationResult d_pcc(const Element& x, Budget budget,
                          const OracleOptions& options = {});

/// Monte-Carlo variants evaluating `draws` random admissible sets; the result
/// is an upper bound on the exhaustive value with no optimality certificate.
ApproximationResult sampled_sigma(const Element& x, Budget budget, int draws,
                                  std::mt19937_64& rng,
                                  const OracleOptions& options = {});
ApproximationResult sampled_d_pcc(const Element& x, Budget budget, int draws,
                                  std::mt19937_64& rng,
                                  const OracleOptions& options = {});

}  // namespace greedykit

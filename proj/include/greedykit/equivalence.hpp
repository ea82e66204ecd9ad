#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <json.hpp>

#include "greedykit/basis.hpp"

namespace greedykit {

struct Theorem3Options {
  double s = 1.0;
  double t = 1.0;
  int samples = 1000;
  std::uint64_t seed = 1;
  double tol = 1e-7;
  /// Sample count for the pccg estimate seeding the initial D(s) lower
  /// bound; 0 starts the feedback from 1.
  int dhat_samples = 200;
};

/// Empirical check of the reduction from the (t,w)-greedy property to the
/// (s,w)-PCCG property.  Per sampled (x, m, Gamma, B, eta, z):
///  (a) the auxiliary element built from x, B, and eta has Gamma\B among its
///      s-greedy sets (the construction differs for t >= s and s > t);
///  (b) the auxiliary element x - z + mu 1_B has B among its s-greedy sets;
///  (two), (three) the residual inequalities hold with D(s) replaced by the
///      running estimate; a violation certifies the estimate was too small
///      and feeds the witness ratio back into it;
///  (d) residual/sigma is within the final constant bound implied by the
///      fed-back estimate.
struct Theorem3Report {
  std::string basis;
  double s = 1.0;
  double t = 1.0;
  int samples = 0;
  int skipped = 0;
  int membership_a_checked = 0;
  int membership_a_failed = 0;
  int membership_b_checked = 0;
  int membership_b_failed = 0;
  double dhat_initial = 1.0;
  double dhat = 1.0;
  int feedback_updates = 0;
  int two_checked = 0;
  int two_skipped = 0;
  int two_violations = 0;
  int three_checked = 0;
  int three_skipped = 0;
  int three_violations = 0;
  int bound_checked = 0;
  int bound_skipped = 0;
  int bound_violations = 0;
  nlohmann::json worst;

  bool ok() const {
    return membership_a_failed == 0 && membership_b_failed == 0 &&
           two_violations == 0 && three_violations == 0 &&
           bound_violations == 0;
  }
};

Theorem3Report verify_theorem3(const std::shared_ptr<const Basis>& basis,
                               const Theorem3Options& options);

nlohmann::json theorem3_report_to_json(const Theorem3Report& report);

}  // namespace greedykit

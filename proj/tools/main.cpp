// Command-line front end: weight condition reports, Haar norm tables,
// constant estimators, the greedy-to-PCCG reduction checker, the weighted
// Haar suite, and one-shot best-approximation oracle queries.

#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "greedykit/config.hpp"
#include "greedykit/equivalence.hpp"
#include "greedykit/estimators.hpp"
#include "greedykit/haar.hpp"
#include "greedykit/haar_suite.hpp"
#include "greedykit/oracle.hpp"
#include "greedykit/random.hpp"
#include "greedykit/report.hpp"
#include "greedykit/serialize.hpp"
#include "greedykit/weights.hpp"

namespace gk = greedykit;

namespace {

// Values from --config override the corresponding flags.  Every key a
// subcommand understands is registered here; leftovers are usage errors.
class ConfigOverride {
 public:
  explicit ConfigOverride(const std::string& path) {
    if (!path.empty()) config_ = gk::load_config_file(path);
  }

  void real(const std::string& key, double& var) {
    known_.insert(key);
    var = gk::config_real(config_, key, var);
  }

  void integer(const std::string& key, int& var) {
    known_.insert(key);
    var = gk::config_int(config_, key, var);
  }

  void text(const std::string& key, std::string& var) {
    known_.insert(key);
    var = gk::config_string(config_, key, var);
  }

  void seed(const std::string& key, std::uint64_t& var) {
    known_.insert(key);
    auto it = config_.find(key);
    if (it == config_.end()) return;
    try {
      std::size_t used = 0;
      var = std::stoull(it->second.value, &used);
      if (used != it->second.value.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("config line " +
                                  std::to_string(it->second.line) + ": '" +
                                  it->second.value + "' is not a seed");
    }
  }

  void flag(const std::string& key, bool& var) {
    known_.insert(key);
    auto it = config_.find(key);
    if (it == config_.end()) return;
    const std::string& v = it->second.value;
    if (v == "1" || v == "true" || v == "on") {
      var = true;
    } else if (v == "0" || v == "false" || v == "off") {
      var = false;
    } else {
      throw std::invalid_argument("config line " +
                                  std::to_string(it->second.line) + ": '" + v +
                                  "' is not a boolean");
    }
  }

  // Rejects keys nobody consumed, pointing at the offending line.
  void finish() const {
    for (const auto& [key, entry] : config_) {
      if (!known_.count(key)) {
        throw std::invalid_argument("config line " +
                                    std::to_string(entry.line) +
                                    ": unknown key '" + key + "'");
      }
    }
  }

 private:
  gk::Config config_;
  std::set<std::string> known_;
};

std::vector<double> parse_real_list(const std::string& text,
                                    const std::string& what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": '" + token + "' is not a number");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text,
                                const std::string& what) {
  std::vector<int> out;
  for (double v : parse_real_list(text, what)) {
    const int n = static_cast<int>(v);
    if (static_cast<double>(n) != v) {
      throw std::invalid_argument(what + ": entries must be integers");
    }
    out.push_back(n);
  }
  return out;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  std::cout << j.dump(2) << "\n";
  if (!out_path.empty()) gk::save_json_file(out_path, j);
}

// Shared by check-weight and haar-suite: a weight from a step-function JSON
// file, the concentrated negative control, or a seeded random draw (whose
// construction keeps every child/parent mass ratio below 1).
gk::DyadicWeight resolve_weight(const std::string& weight_file, bool negative,
                                int level, double spread,
                                std::uint64_t seed) {
  if (!weight_file.empty()) {
    return gk::DyadicWeight(
        gk::step_function_from_json(gk::load_json_file(weight_file)));
  }
  if (negative) {
    return gk::DyadicWeight(gk::concentrated_weight(level));
  }
  std::mt19937_64 rng(seed);
  return gk::DyadicWeight(gk::random_weight(level, spread, rng));
}

struct CheckWeightArgs {
  std::string weight_file;
  std::string config;
  std::string out;
  std::string alphas = "0.5,1,2";
  double p = 2.0;
  double spread = 1.0;
  int level = 6;
  std::uint64_t seed = 1;
  bool negative = false;
};

int run_check_weight(CheckWeightArgs args) {
  ConfigOverride config(args.config);
  config.text("weight", args.weight_file);
  config.text("out", args.out);
  config.text("alpha", args.alphas);
  config.real("p", args.p);
  config.real("spread", args.spread);
  config.integer("level", args.level);
  config.seed("seed", args.seed);
  config.flag("negative-control", args.negative);
  config.finish();

  const gk::DyadicWeight weight = resolve_weight(
      args.weight_file, args.negative, args.level, args.spread, args.seed);
  const int level = weight.level();

  nlohmann::json carleson = nlohmann::json::array();
  for (double alpha : parse_real_list(args.alphas, "--alpha")) {
    carleson.push_back(
        {{"alpha", alpha},
         {"constant", gk::carleson_constant(weight, alpha, level)}});
  }
  nlohmann::json by_level = nlohmann::json::array();
  for (int l = 1; l <= level; ++l) {
    by_level.push_back(gk::carleson_constant(weight, 1.0, l));
  }
  const double delta = gk::reverse_doubling_delta(weight, level);
  emit({{"level", level},
        {"apd", {{"p", args.p}, {"constant", gk::apd_constant(weight, args.p,
                                                              level)}}},
        {"reverse_doubling",
         {{"delta", delta}, {"holds", delta < 1.0}}},
        {"carleson", carleson},
        {"carleson_by_level", by_level}},
       args.out);
  return 0;
}

struct HaarNormsArgs {
  std::string weight_file;
  std::string expansion_file;
  std::string indices;
  std::string config;
  std::string out;
  double p = 2.0;
  int level = 3;
  std::uint64_t seed = 1;
};

int run_haar_norms(HaarNormsArgs args) {
  ConfigOverride config(args.config);
  config.text("weight", args.weight_file);
  config.text("expansion", args.expansion_file);
  config.text("indices", args.indices);
  config.text("out", args.out);
  config.real("p", args.p);
  config.integer("level", args.level);
  config.finish();

  const gk::DyadicWeight weight =
      args.weight_file.empty()
          ? gk::DyadicWeight(
                gk::StepFunction::constant(1.0).refined(args.level))
          : gk::DyadicWeight(gk::step_function_from_json(
                gk::load_json_file(args.weight_file)));
  const int level = weight.level();

  nlohmann::json norms = nlohmann::json::array();
  for (std::size_t ordinal = 0; ordinal < gk::haar_universe_size(level);
       ++ordinal) {
    const gk::HaarIndex index = gk::haar_index_at(ordinal);
    norms.push_back({{"index", ordinal},
                     {"key", index.key()},
                     {"norm", gk::haar_function_norm(index, args.p, weight)}});
  }
  nlohmann::json result{{"level", level}, {"p", args.p}, {"norms", norms}};

  if (!args.indices.empty()) {
    std::vector<gk::HaarIndex> lambda;
    for (int ordinal : parse_int_list(args.indices, "--indices")) {
      if (ordinal < 0 ||
          static_cast<std::size_t>(ordinal) >= gk::haar_universe_size(level)) {
        throw std::invalid_argument("--indices: ordinal out of range");
      }
      lambda.push_back(gk::haar_index_at(static_cast<std::size_t>(ordinal)));
    }
    result["indicator"] = {
        {"indices", parse_int_list(args.indices, "--indices")},
        {"norm", gk::indicator_sum_norm(lambda, args.p, weight, level)}};
  }
  if (!args.expansion_file.empty()) {
    const gk::HaarExpansion expansion = gk::haar_expansion_from_json(
        gk::load_json_file(args.expansion_file));
    if (expansion.level() != level) {
      throw std::invalid_argument("expansion level does not match the weight");
    }
    result["expansion_norm"] = gk::xp_norm(expansion, args.p, weight);
  }
  emit(result, args.out);
  return 0;
}

struct EstimateArgs {
  std::string constant;
  std::string basis;
  std::string budget = "weight";
  std::string config;
  std::string out;
  double t = 1.0;
  double tol = gk::kDefaultOracleTol;
  int samples = 200;
  std::uint64_t seed = 1;
};

int run_estimate(EstimateArgs args) {
  ConfigOverride config(args.config);
  config.text("const", args.constant);
  config.text("basis", args.basis);
  config.text("budget", args.budget);
  config.text("out", args.out);
  config.real("t", args.t);
  config.real("tol", args.tol);
  config.integer("samples", args.samples);
  config.seed("seed", args.seed);
  config.finish();

  if (args.budget != "count" && args.budget != "weight") {
    throw std::invalid_argument("--budget must be 'count' or 'weight'");
  }
  const auto basis = gk::parse_basis_spec(args.basis);
  gk::EstimatorOptions options;
  options.samples = args.samples;
  options.seed = args.seed;
  options.tol = args.tol;
  options.t = args.t;
  options.budget = args.budget == "count" ? gk::BudgetMode::count
                                          : gk::BudgetMode::weight;

  gk::ConstantEstimate estimate;
  std::vector<gk::SampleRow> rows;
  if (args.constant == "suppression") {
    estimate = gk::estimate_suppression_constant(basis, options);
  } else if (args.constant == "symmetry") {
    estimate = gk::estimate_symmetry_largest(basis, options);
  } else if (args.constant == "democracy") {
    estimate = gk::estimate_democracy(basis, options);
  } else if (args.constant == "greedy" || args.constant == "pccg") {
    gk::GreedyEstimates both = gk::estimate_greedy_and_pccg(basis, options);
    estimate = args.constant == "greedy" ? both.greedy : both.pccg;
    rows = std::move(both.rows);
  } else {
    throw std::invalid_argument(
        "--const must be one of suppression, symmetry, democracy, greedy, "
        "pccg");
  }

  const double replay = gk::replay_witness(basis, estimate);
  nlohmann::json summary = gk::constant_estimate_to_json(estimate);
  summary["replay"] = replay;

  if (!args.out.empty()) {
    if (!rows.empty()) {
      gk::write_text_file(args.out, gk::sample_csv(rows));
    } else {
      gk::save_json_file(args.out, summary);
    }
  }
  std::cout << summary.dump(2) << "\n";

  if (estimate.value < 1.0 - 1e-9) {
    std::cerr << "violation: estimated constant " << estimate.value
              << " fell below 1\n";
    return 1;
  }
  if (std::abs(replay - estimate.value) >
      1e-6 * (1.0 + std::abs(estimate.value))) {
    std::cerr << "violation: witness replayed to " << replay
              << " but the estimate is " << estimate.value << "\n";
    return 1;
  }
  return 0;
}

struct Theorem3Args {
  std::string basis;
  std::string config;
  std::string out;
  double s = 1.0;
  double t = 1.0;
  double tol = 1e-7;
  int samples = 300;
  int dhat_samples = 200;
  std::uint64_t seed = 1;
};

int run_theorem3(Theorem3Args args) {
  ConfigOverride config(args.config);
  config.text("basis", args.basis);
  config.text("out", args.out);
  config.real("s", args.s);
  config.real("t", args.t);
  config.real("tol", args.tol);
  config.integer("samples", args.samples);
  config.integer("dhat-samples", args.dhat_samples);
  config.seed("seed", args.seed);
  config.finish();

  const auto basis = gk::parse_basis_spec(args.basis);
  gk::Theorem3Options options;
  options.s = args.s;
  options.t = args.t;
  options.samples = args.samples;
  options.seed = args.seed;
  options.tol = args.tol;
  options.dhat_samples = args.dhat_samples;

  const gk::Theorem3Report report = gk::verify_theorem3(basis, options);
  emit(gk::theorem3_report_to_json(report), args.out);
  if (!report.ok()) {
    std::cerr << "violation: greedy-to-PCCG reduction check failed\n";
    return 1;
  }
  return 0;
}

struct HaarSuiteArgs {
  std::string weight_file;
  std::string config;
  std::string out;
  std::string p_values = "1.5,2,3";
  std::string t_values = "0.5,1";
  std::string alphas = "0.5,1,2";
  double tol = 1e-7;
  double spread = 1.0;
  int level = 6;
  int samples = 1000;
  int lemma_samples = 200;
  std::uint64_t seed = 1;
  bool negative = false;
};

int run_haar_suite(HaarSuiteArgs args) {
  ConfigOverride config(args.config);
  config.text("weight", args.weight_file);
  config.text("out", args.out);
  config.text("p", args.p_values);
  config.text("t", args.t_values);
  config.text("alpha", args.alphas);
  config.real("tol", args.tol);
  config.real("spread", args.spread);
  config.integer("level", args.level);
  config.integer("samples", args.samples);
  config.integer("lemma-samples", args.lemma_samples);
  config.seed("seed", args.seed);
  config.flag("negative-control", args.negative);
  config.finish();

  const gk::DyadicWeight weight = resolve_weight(
      args.weight_file, args.negative, args.level, args.spread, args.seed);

  gk::HaarSuiteOptions options;
  options.p_values = parse_real_list(args.p_values, "--p");
  options.t_values = parse_real_list(args.t_values, "--t");
  options.alpha_values = parse_real_list(args.alphas, "--alpha");
  options.samples = args.samples;
  options.lemma_samples = args.lemma_samples;
  options.seed = args.seed;
  options.tol = args.tol;

  const gk::HaarSuiteReport report = gk::haar_weight_suite(weight, options);
  emit(gk::haar_suite_report_to_json(report), args.out);
  if (!report.ok()) {
    std::cerr << "violation: haar suite found failing inequalities\n";
    return 1;
  }
  return 0;
}

struct OracleArgs {
  std::string basis;
  std::string input_file;
  std::string coeffs;
  std::string kind;
  std::string config;
  std::string out;
  double tol = gk::kDefaultOracleTol;
  std::optional<int> m;
  std::optional<double> delta;
  bool widen = false;
};

int run_oracle(OracleArgs args) {
  ConfigOverride config(args.config);
  config.text("basis", args.basis);
  config.text("input", args.input_file);
  config.text("coeffs", args.coeffs);
  config.text("kind", args.kind);
  config.text("out", args.out);
  config.real("tol", args.tol);
  {
    int m = args.m.value_or(-1);
    config.integer("m", m);
    if (m >= 0) args.m = m;
  }
  {
    double delta = args.delta.value_or(-1.0);
    config.real("delta", delta);
    if (delta >= 0.0) args.delta = delta;
  }
  config.flag("widen", args.widen);
  config.finish();

  if (args.kind != "sigma" && args.kind != "dstar") {
    throw std::invalid_argument("--kind must be 'sigma' or 'dstar'");
  }
  if (args.input_file.empty() == args.coeffs.empty()) {
    throw std::invalid_argument("provide exactly one of --input or --coeffs");
  }
  if (args.m.has_value() == args.delta.has_value()) {
    throw std::invalid_argument("provide exactly one of --m or --delta");
  }

  gk::Element x = [&]() {
    if (!args.input_file.empty()) {
      return gk::element_from_json(gk::load_json_file(args.input_file));
    }
    const auto basis = gk::parse_basis_spec(args.basis);
    return gk::make_element(basis, parse_real_list(args.coeffs, "--coeffs"));
  }();

  const gk::Budget budget = args.m.has_value()
                                ? gk::Budget::count(*args.m)
                                : gk::Budget::weight(*args.delta);
  gk::OracleOptions options;
  options.tol = args.tol;
  options.widen = args.widen;

  const gk::ApproximationResult result = args.kind == "sigma"
                                             ? gk::sigma(x, budget, options)
                                             : gk::d_pcc(x, budget, options);
  emit(gk::approximation_result_to_json(result), args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy approximation toolkit: bases, oracles, dyadic weights"};
  app.require_subcommand(1);

  CheckWeightArgs check_weight;
  auto* cw = app.add_subcommand(
      "check-weight", "Dyadic weight report: A_p, doubling, ancestor sums");
  cw->add_option("--weight", check_weight.weight_file,
                 "Step-function JSON file");
  cw->add_option("--p", check_weight.p, "Exponent for the A_p constant");
  cw->add_option("--alpha", check_weight.alphas,
                 "Comma-separated ancestor-sum orders");
  cw->add_option("--level", check_weight.level,
                 "Resolution for generated weights");
  cw->add_option("--spread", check_weight.spread,
                 "Log-range of the random weight");
  cw->add_option("--seed", check_weight.seed, "Random weight seed");
  cw->add_flag("--negative-control", check_weight.negative,
               "Use the concentrated-mass weight");
  cw->add_option("--out", check_weight.out, "Write the JSON report here");
  cw->add_option("--config", check_weight.config,
                 "key=value file overriding flags");

  HaarNormsArgs haar_norms;
  auto* hn = app.add_subcommand("haar-norms",
                                "Weighted norms of Haar functions and sums");
  hn->add_option("--weight", haar_norms.weight_file,
                 "Step-function JSON file (default: constant 1)");
  hn->add_option("--p", haar_norms.p, "Norm exponent");
  hn->add_option("--level", haar_norms.level,
                 "Resolution when no weight file is given");
  hn->add_option("--indices", haar_norms.indices,
                 "Comma-separated ordinals for an indicator-sum norm");
  hn->add_option("--expansion", haar_norms.expansion_file,
                 "Coefficient JSON file to evaluate");
  hn->add_option("--out", haar_norms.out, "Write the JSON report here");
  hn->add_option("--config", haar_norms.config,
                 "key=value file overriding flags");

  EstimateArgs estimate;
  auto* es = app.add_subcommand("estimate",
                                "Estimate a basis constant with a witness");
  es->add_option("--const", estimate.constant,
                 "suppression | symmetry | democracy | greedy | pccg")
      ->required();
  es->add_option("--basis", estimate.basis,
                 "Basis spec, e.g. lp:2:8, summing:8, haar:2:3")
      ->required();
  es->add_option("--t", estimate.t, "Greedy threshold parameter");
  es->add_option("--budget", estimate.budget, "count | weight");
  es->add_option("--samples", estimate.samples, "Random samples");
  es->add_option("--seed", estimate.seed, "Master seed");
  es->add_option("--tol", estimate.tol, "Oracle tolerance");
  es->add_option("--out", estimate.out,
                 "CSV of per-sample rows (greedy/pccg) or the JSON summary");
  es->add_option("--config", estimate.config,
                 "key=value file overriding flags");

  Theorem3Args theorem3;
  auto* t3 = app.add_subcommand(
      "verify-theorem3", "Check the greedy-to-PCCG reduction on samples");
  t3->add_option("--basis", theorem3.basis, "Basis spec")->required();
  t3->add_option("--t", theorem3.t, "Greedy threshold of the premise");
  t3->add_option("--s", theorem3.s, "PCCG threshold of the conclusion");
  t3->add_option("--samples", theorem3.samples, "Random samples");
  t3->add_option("--seed", theorem3.seed, "Master seed");
  t3->add_option("--tol", theorem3.tol, "Comparison tolerance");
  t3->add_option("--dhat-samples", theorem3.dhat_samples,
                 "Samples for the initial PCCG-constant estimate");
  t3->add_option("--out", theorem3.out, "Write the JSON report here");
  t3->add_option("--config", theorem3.config,
                 "key=value file overriding flags");

  HaarSuiteArgs haar_suite;
  auto* hs = app.add_subcommand(
      "haar-suite", "Interval-sum lemmas and the end-to-end greedy bound");
  hs->add_option("--weight", haar_suite.weight_file,
                 "Step-function JSON file (default: seeded random weight)");
  hs->add_option("--p", haar_suite.p_values, "Comma-separated exponents > 1");
  hs->add_option("--t", haar_suite.t_values,
                 "Comma-separated greedy thresholds");
  hs->add_option("--alpha", haar_suite.alphas,
                 "Comma-separated ancestor-sum orders for the report");
  hs->add_option("--level", haar_suite.level,
                 "Resolution for generated weights");
  hs->add_option("--spread", haar_suite.spread,
                 "Log-range of the random weight");
  hs->add_option("--samples", haar_suite.samples,
                 "End-to-end samples per (p, t)");
  hs->add_option("--lemma-samples", haar_suite.lemma_samples,
                 "Interval-family samples per p");
  hs->add_option("--seed", haar_suite.seed, "Master seed");
  hs->add_option("--tol", haar_suite.tol, "Comparison tolerance");
  hs->add_flag("--negative-control", haar_suite.negative,
               "Use the concentrated-mass weight");
  hs->add_option("--out", haar_suite.out, "Write the JSON report here");
  hs->add_option("--config", haar_suite.config,
                 "key=value file overriding flags");

  OracleArgs oracle;
  auto* oc = app.add_subcommand(
      "oracle", "One-shot best-approximation query (sigma or dstar)");
  oc->add_option("--basis", oracle.basis, "Basis spec (with --coeffs)");
  oc->add_option("--input", oracle.input_file, "Element JSON file");
  oc->add_option("--coeffs", oracle.coeffs, "Comma-separated coefficients");
  oc->add_option("--kind", oracle.kind, "sigma | dstar")->required();
  oc->add_option("--m", oracle.m, "Cardinality budget");
  oc->add_option("--delta", oracle.delta, "Weight budget");
  oc->add_flag("--widen", oracle.widen,
               "Search the whole universe, not just the support");
  oc->add_option("--tol", oracle.tol, "Oracle tolerance");
  oc->add_option("--out", oracle.out, "Write the JSON result here");
  oc->add_option("--config", oracle.config,
                 "key=value file overriding flags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cw->parsed()) return run_check_weight(check_weight);
    if (hn->parsed()) return run_haar_norms(haar_norms);
    if (es->parsed()) return run_estimate(estimate);
    if (t3->parsed()) return run_theorem3(theorem3);
    if (hs->parsed()) return run_haar_suite(haar_suite);
    if (oc->parsed()) return run_oracle(oracle);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

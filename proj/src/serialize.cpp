#include "greedykit/serialize.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace greedykit {
namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

double require_number(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number()) {
    fail(what + " must be a number");
  }
  return j.get<double>();
}

}  // namespace

nlohmann::json step_function_to_json(const StepFunction& f) {
  return nlohmann::json{{"level", f.level()},
                        {"values", std::vector<double>(f.values().begin(),
                                                       f.values().end())}};
}

StepFunction step_function_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("values")) {
    fail("step function JSON needs 'level' and 'values'");
  }
  if (!j["level"].is_number_integer()) {
    fail("step function 'level' must be an integer");
  }
  if (!j["values"].is_array()) {
    fail("step function 'values' must be an array");
  }
  return StepFunction(j["level"].get<int>(),
                      j["values"].get<std::vector<double>>());
}

nlohmann::json indexed_sequence_to_json(const IndexedSequence& sequence) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, value] : sequence.as_key_map()) {
    out[key] = value;
  }
  return out;
}

IndexedSequence indexed_sequence_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    fail("indexed sequence JSON must be an object of n:j keys");
  }
  std::map<std::string, double> map;
  for (const auto& [key, value] : j.items()) {
    map[key] = require_number(value, "indexed sequence entry '" + key + "'");
  }
  return IndexedSequence::from_key_map(map);
}

nlohmann::json haar_expansion_to_json(const HaarExpansion& expansion) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (std::size_t ordinal = 0; ordinal < expansion.universe_size();
       ++ordinal) {
    const double c = expansion.coefficient_at(ordinal);
    if (c != 0.0) {
      coeffs[haar_index_at(ordinal).key()] = c;
    }
  }
  return nlohmann::json{{"level", expansion.level()}, {"coeffs", coeffs}};
}

HaarExpansion haar_expansion_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("coeffs")) {
    fail("expansion JSON needs 'level' and 'coeffs'");
  }
  if (!j["level"].is_number_integer()) {
    fail("expansion 'level' must be an integer");
  }
  if (!j["coeffs"].is_object()) {
    fail("expansion 'coeffs' must map index keys to reals");
  }
  HaarExpansion expansion(j["level"].get<int>());
  for (const auto& [key, value] : j["coeffs"].items()) {
    expansion.set_coefficient(
        HaarIndex::from_key(key),
        require_number(value, "expansion coefficient '" + key + "'"));
  }
  return expansion;
}

std::shared_ptr<const Basis> parse_basis_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ':')) {
    parts.push_back(token);
  }
  auto numeric = [&](const std::string& text, const std::string& what) {
    try {
      std::size_t used = 0;
      const double value = std::stod(text, &used);
      if (used != text.size()) {
        throw std::invalid_argument("trailing characters");
      }
      return value;
    } catch (const std::exception&) {
      fail("basis spec '" + spec + "': " + what + " is not a number");
    }
  };
  if (parts.empty()) {
    fail("empty basis spec");
  }
  const std::string& kind = parts[0];
  if (kind == "lp") {
    if (parts.size() != 3) {
      fail("basis spec '" + spec + "': expected lp:P:N");
    }
    return make_lp_basis(numeric(parts[1], "exponent"),
                         static_cast<int>(numeric(parts[2], "dimension")));
  }
  if (kind == "summing") {
    if (parts.size() != 2) {
      fail("basis spec '" + spec + "': expected summing:N");
    }
    return make_summing_basis(static_cast<int>(numeric(parts[1], "dimension")));
  }
  if (kind == "haar") {
    if (parts.size() != 3 && parts.size() != 4) {
      fail("basis spec '" + spec + "': expected haar:P:L[:WEIGHTFILE]");
    }
    const double p = numeric(parts[1], "exponent");
    const int level = static_cast<int>(numeric(parts[2], "level"));
    detail::require(level >= 0 && level <= kMaxLevel,
                    "basis spec '" + spec + "': level out of range");
    StepFunction base = StepFunction::constant(1.0, level);
    if (parts.size() == 4) {
      base = step_function_from_json(load_json_file(parts[3]));
    }
    DyadicWeight weight{std::move(base)};
    const int universe = haar_universe_size(level);
    return std::make_shared<HaarXpBasis>(
        p, std::move(weight), level,
        std::vector<double>(static_cast<std::size_t>(universe), 1.0), spec);
  }
  fail("unknown basis kind '" + kind + "' (expected lp, summing, or haar)");
}

nlohmann::json element_to_json(const Element& element) {
  return nlohmann::json{{"basis", element.basis->name()},
                        {"coeffs", element.coefficients}};
}

Element element_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("coeffs")) {
    fail("element JSON needs 'basis' and 'coeffs'");
  }
  if (!j["basis"].is_string()) {
    fail("element 'basis' must be a spec string");
  }
  if (!j["coeffs"].is_array()) {
    fail("element 'coeffs' must be an array");
  }
  return make_element(parse_basis_spec(j["basis"].get<std::string>()),
                      j["coeffs"].get<std::vector<double>>());
}

nlohmann::json approximation_result_to_json(const ApproximationResult& result) {
  nlohmann::json out{
      {"budget_mode",
       result.budget.mode == BudgetMode::count ? "count" : "weight"},
      {"budget", result.budget.value},
      {"indices", result.indices},
      {"distance", result.distance},
      {"tolerance", result.tolerance},
      {"kind", result.constant_coefficient ? "dstar" : "sigma"},
      {"label", result.certified ? "exact" : "upper-bound"},
      {"converged", result.converged},
      {"exhaustive", result.exhaustive},
  };
  if (result.constant_coefficient) {
    out["signs"] = result.signs;
    out["alpha"] = result.scalar;
  } else {
    out["coefficients"] = result.coefficients;
  }
  return out;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path);
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& error) {
    throw std::invalid_argument(path + ": " + error.what());
  }
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  out << j.dump(2) << '\n';
}

}  // namespace greedykit

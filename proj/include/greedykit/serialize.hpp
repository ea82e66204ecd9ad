#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "greedykit/basis.hpp"
#include "greedykit/dyadic.hpp"
#include "greedykit/haar.hpp"
#include "greedykit/oracle.hpp"
#include "greedykit/weights.hpp"

namespace greedykit {

/// {"level": L, "values": [...]} with 2^L cell values.
nlohmann::json step_function_to_json(const StepFunction& f);
StepFunction step_function_from_json(const nlohmann::json& j);

/// Flat object mapping "n:j" interval keys to positive reals.
nlohmann::json indexed_sequence_to_json(const IndexedSequence& sequence);
IndexedSequence indexed_sequence_from_json(const nlohmann::json& j);

/// {"level": L, "coeffs": {"root": c, "n:j": c, ...}}; only nonzero
/// coefficients are written, absent keys read back as zero.
nlohmann::json haar_expansion_to_json(const HaarExpansion& expansion);
HaarExpansion haar_expansion_from_json(const nlohmann::json& j);

/// Basis specs: "lp:P:N", "summing:N", "haar:P:L" (flat weight) or
/// "haar:P:L:WEIGHTFILE" where WEIGHTFILE holds a step-function JSON.
std::shared_ptr<const Basis> parse_basis_spec(const std::string& spec);

/// {"basis": spec, "coeffs": [...]}.
nlohmann::json element_to_json(const Element& element);
Element element_from_json(const nlohmann::json& j);

nlohmann::json approximation_result_to_json(const ApproximationResult& result);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace greedykit

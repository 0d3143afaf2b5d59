#pragma once

// JSON and text renderings of engine results. JSON objects use sorted keys so
// that dump(2) of a parsed document reproduces the original bytes.

#include <json.hpp>

#include <string>

#include "eorb/orbifold.hpp"
#include "eorb/sln_formula.hpp"

namespace eorb::report {

using Json = nlohmann::json;

/// [{p, q, coeff: "num/den"}, ...] sorted by (p, q).
Json polynomial_to_json(const epoly::Polynomial& p);
epoly::Polynomial polynomial_from_json(const Json& j);

Json matrix_to_json(const IntegerMatrix& m);
Json class_to_json(const orbifold::ClassContribution& c);
Json classes_to_json(const orbifold::OrbifoldReport& r);
Json duality_classes_to_json(const orbifold::DualityReport& r);
Json closed_form_terms_to_json(const sln::ClosedForm& cf);

std::string matrix_text(const IntegerMatrix& m);
std::string divisors_text(const std::vector<Integer>& divisors);

/// One block per class: "class k" followed by indented fields.
std::string classes_text(const orbifold::OrbifoldReport& r);

/// Canonical serialization used by every command.
std::string dump(const Json& j);

}  // namespace eorb::report

#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "kolchin/bounds.hpp"
#include "kolchin/exponent_matrix.hpp"
#include "kolchin/graded_system.hpp"
#include "kolchin/minimizing.hpp"

namespace kolchin {

using Json = nlohmann::json;

/// Integers are emitted as JSON numbers while they fit 64 bits and as
/// decimal strings beyond that; both are accepted on input.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);  // accepts numbers, "p" and "p/q"

Json to_json(const NumericalPolynomial& p);
NumericalPolynomial polynomial_from_json(const Json& j);

Json to_json(const ExponentMatrix& e);
ExponentMatrix matrix_from_json(const Json& j);
/// Plain-text alternative: first line m, then one row per line.
ExponentMatrix matrix_from_text(const std::string& text);

Json to_json(const GradedSystem& sys);
GradedSystem system_from_json(const Json& j);

Json to_json(const DimPolyResult& r);
Json to_json(const WDecision& d);
Json to_json(const BoundReport& r);
Json to_json(const BoundVerdict& v);
Json to_json(const Invariants& inv);

std::vector<std::vector<std::optional<std::int64_t>>> jacobi_matrix_from_json(
    const Json& j);

}  // namespace kolchin

#pragma once

#include <string>

#include <json.hpp>

#include "cabform/curve.hpp"
#include "cabform/polynomial.hpp"
#include "cabform/verify.hpp"

namespace cabform {

using Json = nlohmann::ordered_json;

/// {"terms":[{"coeff":"p/q","vars":{"x":2,"z":1,"c:3,0":1}}, ...]} with terms
/// in canonical monomial order and variables in precedence order.
Json polynomialToJson(const Polynomial& p);

/// Inverse of polynomialToJson; accepts any term order and accumulates
/// duplicates. Throws ParseError on malformed input.
Polynomial polynomialFromJson(const Json& j);

/// Curve schema: {"a": int, "b": int, "coefficients": [{"i": int, "j": int,
/// "value": "p/q" | "symbolic"}]}. Omitted indices are zero; (0,a) must be
/// present with value "1".
CurveSpec curveFromJson(const Json& j);
CurveSpec curveFromFile(const std::string& path);

/// {"check": ..., "status": ..., "mode": ...|null, "witness": ...|null,
/// "elapsedMs": int} plus "notes" when any are present.
Json reportToJson(const VerificationReport& report);

}  // namespace cabform

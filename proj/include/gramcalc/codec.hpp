#pragma once

#include "gramcalc/laurent.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace gramcalc {

using json = nlohmann::json;

/// Canonical text form, e.g. "x^2*y + x*y^2". Gaussian coefficients render as
/// "(a + b*I)"; the imaginary unit is the reserved identifier I.
std::string render(const LaurentPoly& f);

/// Parses sums of products of rationals, variables, I, parenthesized
/// subexpressions and integer powers (negative powers only of single terms).
/// Variables are ordered by `hint` first, then by first appearance.
LaurentPoly parse_poly(std::string_view text, const VarTable& hint = {});

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const LaurentPoly& f);
LaurentPoly from_json(const json& j);

} // namespace gramcalc

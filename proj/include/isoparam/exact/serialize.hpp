#pragma once

#include <isoparam/exact/poly_matrix.hpp>

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace isoparam::exact {

using Json = nlohmann::json;

// Rational: "p/q" string. TauPoly: [{"half_pow": int, "coeff": "p/q"}, ...]
// sorted by exponent. DLinear: {"const": TauPoly, "d": {"k": TauPoly}}.
// PolyMatrix: {"rows", "cols", "entries"} with entries row-major.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const TauPoly& p);
TauPoly tau_poly_from_json(const Json& j);
Json to_json(const DLinear& f);
DLinear dlinear_from_json(const Json& j);
Json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j);

// RFC 4180 field quoting.
std::string csv_field(std::string_view field);
std::string csv_line(const std::vector<std::string>& fields);
// One CSV line per matrix row, cells rendered with TauPoly/DLinear strings.
std::string to_csv(const PolyMatrix& m);

}  // namespace isoparam::exact

#include <isoparam/errors.hpp>
#include <isoparam/exact/serialize.hpp>

#include <string>

namespace isoparam::exact {

std::string to_string(const DLinear& f) {
  if (f.is_zero()) return "0";
  std::string out;
  auto append = [&out](const TauPoly& coeff, const std::string& sym) {
    std::string body = coeff.str();
    const bool compound = coeff.terms().size() > 1;
    if (!sym.empty()) {
      if (compound) {
        body = "(" + body + ")*" + sym;
      } else if (body == "1") {
        body = sym;
      } else if (body == "-1") {
        body = "-" + sym;
      } else {
        body += "*" + sym;
      }
    }
    if (out.empty()) {
      out = body;
    } else if (!compound && body.front() == '-') {
      out += " - " + body.substr(1);
    } else {
      out += " + " + body;
    }
  };
  if (!f.constant().is_zero()) append(f.constant(), "");
  for (const auto& [k, c] : f.coeffs()) append(c, "d" + std::to_string(k));
  return out;
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw PreconditionError("rational must be a string \"p/q\" or an integer");
  return parse_rational(j.get<std::string>());
}

Json to_json(const TauPoly& p) {
  Json arr = Json::array();
  for (const auto& [h, c] : p.terms()) arr.push_back({{"half_pow", h}, {"coeff", rational_to_json(c)}});
  return arr;
}

TauPoly tau_poly_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("TauPoly must be a JSON array of terms");
  TauPoly p;
  for (const auto& term : j) {
    if (!term.contains("half_pow") || !term.contains("coeff"))
      throw PreconditionError("TauPoly term needs half_pow and coeff");
    p += TauPoly::monomial(rational_from_json(term.at("coeff")), term.at("half_pow").get<int>());
  }
  return p;
}

Json to_json(const DLinear& f) {
  Json d = Json::object();
  for (const auto& [k, c] : f.coeffs()) d[std::to_string(k)] = to_json(c);
  return {{"const", to_json(f.constant())}, {"d", d}};
}

DLinear dlinear_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("const")) throw PreconditionError("DLinear must be an object with \"const\"");
  DLinear f(tau_poly_from_json(j.at("const")));
  if (j.contains("d")) {
    for (const auto& [key, val] : j.at("d").items()) {
      int k = 0;
      try {
        k = std::stoi(key);
      } catch (const std::exception&) {
        throw PreconditionError("bad d-symbol key: " + key);
      }
      f += d_symbol(k, tau_poly_from_json(val));
    }
  }
  return f;
}

Json to_json(const PolyMatrix& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(to_json(e));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

PolyMatrix poly_matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  std::vector<DLinear> entries;
  for (const auto& e : j.at("entries")) entries.push_back(dlinear_from_json(e));
  return PolyMatrix(rows, cols, std::move(entries));
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out;
}

std::string to_csv(const PolyMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> cells;
    for (std::size_t j = 0; j < m.cols(); ++j) cells.push_back(to_string(m(i, j)));
    out += csv_line(cells) + "\n";
  }
  return out;
}

}  // namespace isoparam::exact

#include <isoparam/coeffs/reference_z.hpp>
#include <isoparam/errors.hpp>

#include <string>
#include <string_view>

namespace isoparam::coeffs {

namespace {

using exact::TauPoly;

// "c", "ct", "ct^e" with integer c, e.
TauPoly parse_cell(std::string_view cell) {
  const auto t = cell.find('t');
  if (t == std::string_view::npos) return TauPoly(std::stol(std::string(cell)));
  const long c = t == 0 ? 1 : std::stol(std::string(cell.substr(0, t)));
  int e = 1;
  if (t + 1 < cell.size()) {
    if (cell[t + 1] != '^') throw PreconditionError("reference table: bad cell " + std::string(cell));
    e = std::stoi(std::string(cell.substr(t + 2)));
  }
  return TauPoly::tau_power(e, c);
}

exact::PolyMatrix parse_table(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<TauPoly>> out;
  for (const auto& r : rows) {
    std::vector<TauPoly> row;
    for (const char* cell : r) row.push_back(parse_cell(cell));
    out.push_back(std::move(row));
  }
  return exact::PolyMatrix::from_rows(out);
}

}  // namespace

exact::PolyMatrix reference_z(int n) {
  switch (n) {
    case 2:
      return parse_table({
          {"t", "0", "0", "2"},
          {"0", "t", "3t", "0"},
          {"t^2", "0", "0", "4t"},
      });
    case 3:
      return parse_table({
          {"2t", "0", "2", "0", "2", "0"},
          {"0", "4t", "0", "6t", "0", "6"},
          {"8t^2", "0", "8t", "0", "16t", "0"},
          {"0", "16t^2", "0", "40t^2", "0", "40t"},
          {"32t^3", "0", "32t^2", "0", "96t^2", "0"},
      });
    case 4:
      return parse_table({
          {"3t", "0", "2", "0", "0", "2", "0", "0"},
          {"0", "7t", "0", "6", "9t", "0", "6", "0"},
          {"21t^2", "0", "20t", "0", "0", "28t", "0", "24"},
          {"0", "61t^2", "0", "60t", "105t^2", "0", "100t", "0"},
          {"183t^3", "0", "182t^2", "0", "0", "366t^2", "0", "360t"},
          {"0", "547t^3", "0", "546t^2", "1281t^3", "0", "1274t^2", "0"},
          {"1641t^4", "0", "1640t^3", "0", "0", "4376t^3", "0", "4368t^2"},
      });
    case 5:
      return parse_table({
          {"4t", "0", "2", "0", "0", "0", "2", "0", "0", "0"},
          {"0", "10t", "0", "6", "0", "12t", "0", "6", "0", "0"},
          {"40t^2", "0", "32t", "0", "24", "0", "40t", "0", "24", "0"},
          {"0", "136t^2", "0", "120t", "0", "200t^2", "0", "160t", "0", "120"},
          {"544t^3", "0", "512t^2", "0", "480t", "0", "816t^2", "0", "720t", "0"},
          {"0", "2080t^3", "0", "2016t^2", "0", "3808t^3", "0", "3584t^2", "0", "3360t"},
          {"8320t^4", "0", "8192t^3", "0", "8064t^2", "0", "16640t^3", "0", "16128t^2", "0"},
          {"0", "32896t^4", "0", "32640t^3", "0", "74880t^2", "0", "73728t^3", "0", "72576t^2"},
          {"131584t^5", "0", "131072t^4", "0", "130560t^3", "0", "328960t^2", "0", "326400t^3", "0"},
      });
    default:
      throw PreconditionError("reference_z: tables exist for n = 2..5 only");
  }
}

const std::vector<PrintedErratum>& reference_z_errata() {
  static const std::vector<PrintedErratum> errata = {{5, 7, 5}, {5, 8, 6}};
  return errata;
}

}  // namespace isoparam::coeffs

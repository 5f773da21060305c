#include <isoparam/coeffs/pq_table.hpp>
#include <isoparam/detsys/mainlinear.hpp>
#include <isoparam/detsys/system.hpp>
#include <isoparam/errors.hpp>
#include <isoparam/exact/serialize.hpp>
#include <isoparam/geometry/graph.hpp>
#include <isoparam/kac/kac.hpp>
#include <isoparam/verify/dump.hpp>

#include <charconv>
#include <sstream>

namespace isoparam::verify {

namespace {

int parse_int(const std::string& s, const char* what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw PreconditionError(std::string("dump: bad ") + what + ": " + s);
  return v;
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw PreconditionError(std::string("dump: bad ") + what + ": " + s);
}

int dimension(const std::vector<std::string>& t, std::size_t at) {
  if (t.size() <= at) throw PreconditionError("dump: missing dimension n");
  const int n = parse_int(t[at], "dimension");
  if (n < 2) throw PreconditionError("dump: n must be >= 2");
  return n;
}

void arity(const std::vector<std::string>& t, std::size_t lo, std::size_t hi) {
  if (t.size() < lo || t.size() > hi) throw PreconditionError("dump: wrong number of arguments for " + t[0]);
}

std::string matrix_out(const exact::PolyMatrix& m, DumpFormat f) {
  return f == DumpFormat::json ? exact::to_json(m).dump(2) + "\n" : exact::to_csv(m);
}

std::string system_out(int n, DumpFormat f) {
  const detsys::SystemMP sys = detsys::assemble_system(n);
  std::vector<exact::DLinear> dets;
  for (int j = 1; j <= static_cast<int>(sys.size()); ++j) dets.push_back(detsys::det_mj(sys, j));
  if (f == DumpFormat::csv) {
    // One row per monomial of each det M_j.
    std::string out = exact::csv_line({"n", "j", "d_index", "mu", "tau_half_power"}) + "\n";
    for (std::size_t j = 0; j < dets.size(); ++j) {
      for (const auto& t : detsys::read_structure(dets[j]).terms)
        out += exact::csv_line({std::to_string(n), std::to_string(j + 1), std::to_string(t.d_index),
                                exact::to_string(t.mu), std::to_string(t.half_pow)}) +
               "\n";
    }
    return out;
  }
  nlohmann::json p = nlohmann::json::array(), det_j = nlohmann::json::array();
  for (const auto& e : sys.p) p.push_back(exact::to_json(e));
  for (const auto& d : dets) det_j.push_back(exact::to_json(d));
  nlohmann::json j{{"n", n},
                   {"levels", sys.levels},
                   {"Z", exact::to_json(sys.Z)},
                   {"M", exact::to_json(sys.M)},
                   {"P", p},
                   {"det_M", exact::to_json(detsys::det_m(sys))},
                   {"det_Mj", det_j}};
  return j.dump(2) + "\n";
}

std::string bowl_out(int n, const std::string& h_text, DumpFormat f) {
  const exact::Rational H = exact::parse_rational(h_text);
  const geometry::ExactBowl eb = geometry::bowl_exact(n, H);
  const geometry::Bowl b = geometry::bowl(n, exact::to_double(H));
  if (f == DumpFormat::csv) return geometry::profile_csv(b.profile, 11);
  nlohmann::json ks = nlohmann::json::array();
  for (const auto& k : eb.curvatures) ks.push_back(exact::to_string(k));
  nlohmann::json j{{"n", n},
                   {"H", exact::to_string(H)},
                   {"rho", exact::to_string(eb.rho)},
                   {"theta", b.theta},
                   {"curvatures", ks},
                   {"curvature_sum", exact::to_string(eb.sum)},
                   {"class", geometry::to_json(b.cls)},
                   {"family", geometry::to_json(b.profile.family)}};
  return j.dump(2) + "\n";
}

}  // namespace

std::string dump(const std::vector<std::string>& t, DumpFormat f) {
  if (t.empty()) throw PreconditionError("dump: missing target");
  const std::string& what = t[0];
  if (what == "Z") {
    arity(t, 2, 2);
    return matrix_out(coeffs::build_Z(dimension(t, 1)), f);
  }
  if (what == "kac") {
    arity(t, 2, 2);
    return matrix_out(kac::build_kac(dimension(t, 1)).entries, f);
  }
  if (what == "Q") {
    arity(t, 2, 3);
    const kac::QMatrix q = kac::build_q(dimension(t, 1));
    const int j = t.size() == 3 ? parse_int(t[2], "power") : 1;
    if (j < 1) throw PreconditionError("dump: power must be >= 1");
    return matrix_out(kac::q_block_power(q, j), f);
  }
  if (what == "system") {
    arity(t, 2, 2);
    return system_out(dimension(t, 1), f);
  }
  if (what == "bowl") {
    arity(t, 3, 3);
    return bowl_out(dimension(t, 1), t[2], f);
  }
  if (what == "profile") {
    // profile <family-id> n H y0 s0 s1
    arity(t, 7, 7);
    const int n = dimension(t, 2);
    const geometry::ParallelFamily fam = geometry::family_by_id(n, t[1]);
    const geometry::GraphProfile p =
        geometry::ode_solve(fam, parse_double(t[3], "H"), parse_double(t[4], "y0"), parse_double(t[5], "s0"),
                            parse_double(t[6], "s1"));
    if (f == DumpFormat::csv) return geometry::profile_csv(p, 21);
    nlohmann::json j{{"family", geometry::to_json(fam)}, {"H", *p.H}, {"rows", geometry::profile_table(p, 21)}};
    return j.dump(2) + "\n";
  }
  throw PreconditionError("dump: unknown target " + what);
}

}  // namespace isoparam::verify

#include <isoparam/coeffs/pq_table.hpp>
#include <isoparam/coeffs/reference_z.hpp>
#include <isoparam/detsys/mainlinear.hpp>
#include <isoparam/detsys/system.hpp>
#include <isoparam/errors.hpp>
#include <isoparam/exact/serialize.hpp>
#include <isoparam/geometry/classify.hpp>
#include <isoparam/geometry/graph.hpp>
#include <isoparam/kac/kac.hpp>
#include <isoparam/kac/spectrum.hpp>
#include <isoparam/verify/suite.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace isoparam::verify {

using exact::Rational;
using exact::TauPoly;

namespace {

int default_k_max(int n) { return 2 * n + 10; }

// One record standing for several sub-checks of the same claim.
ClaimCheck merge(const std::string& claim, const std::string& ref, const CheckList& parts) {
  nlohmann::json w = nlohmann::json::array();
  bool ok = true;
  bool flagged = false;
  for (const auto& p : parts) {
    ok = ok && p.ok();
    flagged = flagged || p.status == Status::flagged;
    w.push_back(p.witness);
  }
  ClaimCheck c = make_check(claim, ref, ok, {{"parts", w}});
  if (ok && flagged) c.status = Status::flagged;
  return c;
}

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  std::vector<double> ev;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) ev.push_back(es.eigenvalues()[i].real());
  std::sort(ev.begin(), ev.end());
  return ev;
}

jacobi::ShapeSpec random_spec(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0), angle(-0.9, 0.9);
  jacobi::ShapeSpec spec{n, rng() % 2 == 0 ? 1 : -1, angle(rng), Eigen::MatrixXd(n, n)};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) spec.a(i, j) = spec.a(j, i) = entry(rng);
  return spec;
}

double interior_point(const geometry::ParallelFamily& f) { return std::isfinite(f.lo) ? f.lo + 0.3 : 0.4; }

}  // namespace

std::vector<Rational> default_tau_samples() {
  return {Rational(1), Rational(4), exact::make_rational(9, 4), Rational(-1), Rational(-4)};
}

void RunConfig::validate() const {
  if (n_range.empty()) throw PreconditionError("config: n_range is empty");
  for (int n : n_range) {
    if (n < 2) throw PreconditionError("config: every n must be >= 2");
    if (n > 8) throw PreconditionError("config: n > 8 is outside the supported range");
    if (k_max != 0 && k_max < 2 && n % 2 == 0) throw PreconditionError("config: k_max must be >= 2");
    if (k_max != 0 && n % 2 == 1 && k_max < 2 * n)
      throw PreconditionError("config: k_max must be >= 2n for odd n = " + std::to_string(n));
  }
  if (k_max < 0) throw PreconditionError("config: k_max must be >= 0");
  for (int s : s_values)
    if (s < 1) throw PreconditionError("config: s values must be >= 1");
  for (const auto& t : tau_samples)
    if (t == 0) throw PreconditionError("config: tau samples must be nonzero");
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json taus = nlohmann::json::array();
  for (const auto& t : tau_samples) taus.push_back(exact::to_string(t));
  return {{"n_range", n_range},
          {"k_max", k_max},
          {"s_values", s_values},
          {"tau_samples", taus},
          {"tolerances", {{"spectrum", tol.spectrum}, {"jacobi", tol.jacobi}, {"alpha0", tol.alpha0}, {"cmc", tol.cmc}}}};
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  if (!j.is_object()) throw PreconditionError("config: expected a JSON object");
  try {
    if (j.contains("n_range")) c.n_range = j.at("n_range").get<std::vector<int>>();
    if (j.contains("k_max")) c.k_max = j.at("k_max").get<int>();
    if (j.contains("s_values")) c.s_values = j.at("s_values").get<std::vector<int>>();
    if (j.contains("tau_samples")) {
      c.tau_samples.clear();
      for (const auto& t : j.at("tau_samples"))
        c.tau_samples.push_back(t.is_string() ? exact::parse_rational(t.get<std::string>()) : exact::rational_from_json(t));
    }
    if (j.contains("tolerances")) {
      const auto& t = j.at("tolerances");
      if (t.contains("spectrum")) c.tol.spectrum = t.at("spectrum").get<double>();
      if (t.contains("jacobi")) c.tol.jacobi = t.at("jacobi").get<double>();
      if (t.contains("alpha0")) c.tol.alpha0 = t.at("alpha0").get<double>();
      if (t.contains("cmc")) c.tol.cmc = t.at("cmc").get<double>();
    }
    if (j.contains("timings")) c.timings = j.at("timings").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("config: ") + e.what());
  }
  return c;
}

ClaimCheck golden_z_check(int n) {
  const exact::PolyMatrix z = coeffs::build_Z(n);
  const exact::PolyMatrix ref = coeffs::reference_z(n);
  nlohmann::json w{{"n", n}, {"rows", z.rows()}, {"cols", z.cols()}};
  if (z.rows() != ref.rows() || z.cols() != ref.cols()) {
    w["error"] = "shape mismatch";
    return make_check("examp-Zmatrices", "Z tables for n = 2..5", false, w);
  }
  std::vector<std::pair<int, int>> errata;
  for (const auto& e : coeffs::reference_z_errata())
    if (e.n == n) errata.emplace_back(e.row, e.col);

  bool explained = true;
  nlohmann::json mism = nlohmann::json::array();
  for (std::size_t i = 0; i < z.rows(); ++i) {
    for (std::size_t j = 0; j < z.cols(); ++j) {
      if (z.poly(i, j) == ref.poly(i, j)) continue;
      const bool listed = std::find(errata.begin(), errata.end(), std::pair<int, int>(i, j)) != errata.end();
      // Level i+2; p-columns want tau^((k-l)/2), q-columns tau^((k-l-1)/2).
      const int k = static_cast<int>(i) + 2;
      const bool is_p = static_cast<int>(j) < n;
      const int ell = is_p ? static_cast<int>(j) : static_cast<int>(j) - n;
      const int want = is_p ? k - ell : k - ell - 1;
      auto degree_ok = [&](const TauPoly& v) { return v.is_monomial() && v.max_half_pow() == want; };
      const bool real_typo = listed && degree_ok(z.poly(i, j)) && !degree_ok(ref.poly(i, j));
      explained = explained && real_typo;
      mism.push_back({{"row", i + 1},
                      {"col", j + 1},
                      {"computed", z.poly(i, j).str()},
                      {"printed", ref.poly(i, j).str()},
                      {"listed_erratum", listed},
                      {"printed_breaks_degree_rule", real_typo}});
    }
  }
  w["mismatches"] = mism;
  w["errata_listed"] = errata.size();
  ClaimCheck c = make_check("examp-Zmatrices", "Z tables for n = 2..5", explained && mism.size() == errata.size(), w);
  if (c.ok() && !mism.empty()) c.status = Status::flagged;
  return c;
}

ClaimCheck stated_recursion_check(int n, int k_max) {
  const char* id = n == 3 ? "eq-rec3" : "lem-coeff";
  const coeffs::PQTable t = coeffs::pq_table(n, k_max);
  nlohmann::json w{{"n", n}, {"k_max", k_max}};
  if (coeffs::stated_initial_row(n) != t.row(2)) {
    w["first_mismatch_level"] = 2;
    return make_check(id, "printed p/q recursion", false, w);
  }
  for (int k = 2; k < k_max; ++k) {
    if (coeffs::stated_recursion_step(n, t.row(k)) != t.row(k + 1)) {
      w["first_mismatch_level"] = k + 1;
      return make_check(id, "printed p/q recursion", false, w);
    }
  }
  return make_check(id, "printed p/q recursion", true, w);
}

ClaimCheck q30_display_check() {
  const TauPoly computed = coeffs::pq_table(3, 3).q(3, 0);
  const TauPoly displayed = TauPoly::tau_power(1, Rational(4));
  const TauPoly table = coeffs::reference_z(3).poly(1, 3);
  nlohmann::json w{{"computed", computed.str()}, {"displayed_in_proof", displayed.str()}, {"printed_table", table.str()}};
  ClaimCheck c = make_check("prop-coeff3(iv) q_{3,0}", "q_{3,0} = 3 * 2 tau", computed == displayed || computed == table, w);
  if (computed != displayed && computed == table) c.status = Status::flagged;
  return c;
}

CheckList kac_checks(int n, int k_max, const std::vector<Rational>& taus, double tol) {
  CheckList out;
  const kac::KacMatrix k = kac::build_kac(n);
  nlohmann::json base{{"n", n}};

  {
    nlohmann::json w = base;
    bool ok = true;
    try {
      w["char_poly"] = kac::to_string(kac::char_poly(k));
    } catch (const VerificationError& e) {
      ok = false;
      w["error"] = e.what();
    }
    out.push_back(make_check("kac-lemma(i)", "det(xI - K) = x^(n mod 2) prod (x^2 - m^2 tau)", ok, w));
  }

  std::vector<kac::SpectrumReport> spectra;
  for (const auto& t : taus) spectra.push_back(kac::spectrum_check(n, t, tol));
  {
    nlohmann::json w = base, rows = nlohmann::json::array();
    bool ok = true;
    for (const auto& s : spectra) {
      ok = ok && s.max_eigenvalue_error <= tol;
      rows.push_back({{"tau", s.tau}, {"max_eigenvalue_error", s.max_eigenvalue_error}});
    }
    w["samples"] = rows;
    w["tol"] = tol;
    out.push_back(make_check("kac-lemma(i) spectrum", "eigenvalues (n-1-2l) sqrt(tau)", ok, w));
  }
  {
    const std::size_t r = kac::kac_rank(k);
    const std::size_t want = n % 2 == 0 ? n : n - 1;
    out.push_back(make_check("kac-lemma(ii)", "rank K = n (even), n-1 (odd)", r == want,
                             {{"n", n}, {"rank", r}, {"expected", want}}));
  }
  {
    nlohmann::json w = base, rows = nlohmann::json::array();
    bool ok = true;
    for (const auto& s : spectra) {
      if (!s.real_branch) continue;
      ok = ok && s.min_e1_coordinate > tol;
      rows.push_back({{"tau", s.tau}, {"min_e1_coordinate", s.min_e1_coordinate}});
    }
    w["samples"] = rows;
    out.push_back(make_check("kac-lemma(iii)", "e_1 has no vanishing eigen-coordinate", ok, w));
  }
  {
    const std::size_t r = exact::matrix_rank(kac::build_q(n).entries);
    const bool ok = (n % 2 == 0) == (r == static_cast<std::size_t>(2 * n));
    out.push_back(make_check("kac-cor(i)", "Q nonsingular iff n even", ok, {{"n", n}, {"rank_Q", r}}));
  }
  {
    nlohmann::json w = base, rows = nlohmann::json::array();
    bool ok = true;
    for (const auto& s : spectra) {
      if (!s.real_branch) continue;
      ok = ok && s.max_generalized_residual <= tol;
      rows.push_back({{"tau", s.tau}, {"max_residual", s.max_generalized_residual}});
    }
    w["samples"] = rows;
    out.push_back(make_check("kac-cor(ii)", "x_l Q = l x_l + y_l, y_l Q = l y_l", ok, w));
  }
  {
    nlohmann::json w{{"n", n}, {"j_max", k_max}};
    bool ok = true;
    try {
      const kac::QMatrix q = kac::build_q(n);
      for (int j = 1; j <= k_max; ++j) kac::q_block_power(q, j);
    } catch (const VerificationError& e) {
      ok = false;
      w["error"] = e.what();
    }
    out.push_back(make_check("eq-Qpowerk", "Q^j = [[K^j, j K^(j-1)], [0, K^j]]", ok, w));
  }
  {
    nlohmann::json w{{"n", n}, {"offset", kac::kRowPowerOffset}, {"rows", k_max - 1}};
    bool ok = true;
    for (int i = 1; i < k_max && ok; ++i) {
      if (coeffs::z_row(n, i) != kac::row_power(n, i + kac::kRowPowerOffset)) {
        ok = false;
        w["first_mismatch_row"] = i;
      }
    }
    out.push_back(make_check("LK", "Z row i = (e_1, 0) Q^(i+1)", ok, w));
  }
  return out;
}

CheckList determinant_checks_n2() {
  const exact::DLinear got = detsys::det_mj(detsys::assemble_system(2), 2);
  return {make_check("eq-n=2", "det M_2 = 2 tau^3 - 4 d_1 tau^2 + 2 d_3 tau", got == detsys::expected_eq_n2(),
                     {{"det_M2", exact::to_string(got)}, {"expected", exact::to_string(detsys::expected_eq_n2())}})};
}

CheckList determinant_checks_n3(const std::vector<int>& s_values) {
  CheckList out;
  const detsys::SystemMP sys = detsys::assemble_system(3);
  std::vector<exact::DLinear> det(6);
  for (int j = 1; j <= 5; ++j) det[j] = detsys::det_mj(sys, j);
  const exact::DLinear expected5 = detsys::expected_det_m5_n3();

  out.push_back(make_check("eq-detM3", "det M_5 = d_1 2^14 tau^6 - d_3 2^13 tau^5 + d_5 2^10 tau^4", det[5] == expected5,
                           {{"det_M5", exact::to_string(det[5])}, {"expected", exact::to_string(expected5)}}));

  const TauPoly tau = TauPoly::tau();
  const bool literal = det[5] == -det[3];
  const bool scaled = det[5] == -(det[3] * tau);
  ClaimCheck sign = make_check("eq-detM3 sign relation", "det M_5 = -det M_3", literal || scaled,
                               {{"det_M3", exact::to_string(det[3])},
                                {"det_M5", exact::to_string(det[5])},
                                {"literal_holds", literal},
                                {"det_M5_equals_minus_tau_det_M3", scaled}});
  if (!literal && scaled) sign.status = Status::flagged;
  out.push_back(sign);
  out.push_back(make_check("eq-detM3 tau relation", "det M_5 + tau det M_3 = 0", (det[5] + det[3] * tau).is_zero(),
                           {{"det_M3", exact::to_string(det[3])}, {"det_M5", exact::to_string(det[5])}}));

  nlohmann::json zeros = nlohmann::json::object();
  bool all_zero = true;
  for (int j : {1, 2, 4}) {
    zeros["det_M" + std::to_string(j)] = exact::to_string(det[j]);
    all_zero = all_zero && det[j].is_zero();
  }
  out.push_back(make_check("eq-detM3 other columns", "det M_j = 0 for j not in {3, 5}", all_zero, zeros));

  std::vector<int> ss;
  for (int s : s_values)
    if (s >= 3) ss.push_back(s);
  if (ss.empty())
    for (int s = 3; s <= 8; ++s) ss.push_back(s);
  for (int s : ss) {
    const exact::DLinear got = detsys::det_mbar(3, s, detsys::RowParity::even, 3);
    const exact::DLinear base = detsys::det_mbar(3, s, detsys::RowParity::even, 0);
    const exact::DLinear want = detsys::expected_eq_n3(s);
    out.push_back(make_check("eq-n=3", "det Mbar_3(s) closed form, det Mbar = 0", got == want && base.is_zero(),
                             {{"s", s},
                              {"det", exact::to_string(got)},
                              {"expected", exact::to_string(want)},
                              {"base_det", exact::to_string(base)}}));
  }
  return out;
}

ClaimCheck det_m_zero_check(int n) {
  const exact::DLinear d = detsys::det_m(detsys::assemble_system(n));
  return make_check("eq-linearsystem det M", "det M = 0", d.is_zero(), {{"n", n}, {"det_M", exact::to_string(d)}});
}

CheckList jacobi_checks(int n, const Tolerances& tol) {
  CheckList out;
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned>(n));
  std::vector<jacobi::ShapeSpec> specs;
  for (int i = 0; i < 10; ++i) specs.push_back(random_spec(rng, n));

  bool ivp = true, fd = true, f_zero = true, derivs = true;
  double fd_worst = 0.0, f_worst = 0.0, d_worst = 0.0;
  int focal_skipped = 0;
  for (const auto& spec : specs) {
    const jacobi::BC at0 = jacobi::b_solution(spec, 0.0);
    ivp = ivp && at0.B == Eigen::MatrixXd::Identity(n, n) && at0.C == -spec.a;

    const double h = 1e-6;
    const Eigen::MatrixXd diff = (jacobi::b_solution(spec, h).B - jacobi::b_solution(spec, -h).B) / (2 * h);
    fd_worst = std::max(fd_worst, (diff - at0.C).cwiseAbs().maxCoeff());

    const jacobi::DFormula formula = jacobi::dformula_extract(spec);
    for (int k = 0; k < 20; ++k) {
      const double r = -0.3 + 0.6 * k / 19.0;
      try {
        const Eigen::MatrixXd A = jacobi::shape_of_parallel(spec, r);
        const double D = jacobi::b_solution(spec, r).B.determinant();
        const double Dp = formula.derivative(1).evaluate(r);
        f_worst = std::max(f_worst, std::abs(Dp + A.trace() * D) / (1.0 + std::abs(D)));
      } catch (const FocalPointError&) {
        ++focal_skipped;
      }
    }
    const double r0 = 0.17;
    const jacobi::Jet dj = jacobi::d_jet(spec, r0);
    double fact = 1.0;
    for (int k = 0; k <= 4; ++k) {
      if (k > 1) fact *= k;
      d_worst = std::max(d_worst, std::abs(formula.derivative(k).evaluate(r0) - dj.derivative_at(k)) / fact);
    }
  }
  fd = fd_worst <= 1e-6;
  f_zero = f_worst <= tol.jacobi;
  derivs = d_worst <= 1e-6;
  out.push_back(make_check("eq-IVP", "B(0) = I, C(0) = -a", ivp, {{"n", n}, {"specs", specs.size()}}));
  out.push_back(make_check("eq-solutions", "C = B' by central differences", fd,
                           {{"n", n}, {"max_error", fd_worst}, {"tol", 1e-6}}));
  out.push_back(make_check("eq-fderivatives", "f = D' + H D = 0", f_zero,
                           {{"n", n}, {"max_residual", f_worst}, {"tol", tol.jacobi}, {"focal_skipped", focal_skipped}}));
  out.push_back(make_check("eq-Dderivatives", "recursion formula for D^(k) against Taylor jets, k <= 4", derivs,
                           {{"n", n}, {"max_error_over_k_factorial", d_worst}, {"tol", 1e-6}}));

  const geometry::ParallelFamily spheres = geometry::geodesic_sphere_family(n, -1);
  for (auto c : jacobi::alpha0_consistency(geometry::cylinder_spec(spheres, 1.0), spheres.mean_curvature_jet(1.0), 5,
                                           tol.alpha0)) {
    c.witness["spec"] = "cylinder over geodesic sphere, s0 = 1";
    out.push_back(std::move(c));
  }
  const double H = (n - 1) / 2.0;
  for (auto c : jacobi::alpha0_consistency(geometry::bowl_spec(n, H), jacobi::Jet::constant(H), 5, tol.alpha0)) {
    c.witness["spec"] = "parabolic bowl";
    c.witness["H"] = H;
    out.push_back(std::move(c));
  }
  return out;
}

CheckList geometry_checks(int n, const Tolerances& tol) {
  CheckList out;
  const Rational H_exact = exact::make_rational(n - 1, 2);
  const double H = exact::to_double(H_exact);

  {
    const geometry::ExactBowl eb = geometry::bowl_exact(n, H_exact);
    const geometry::Bowl b = geometry::bowl(n, H);
    const ClaimCheck cmc = geometry::cmc_check(b.profile, H, tol.cmc);
    const bool ok = eb.rho == H_exact / Rational(n - 1) && eb.sum == H_exact && cmc.ok() &&
                    b.cls.tag == geometry::ClassTag::parabolic_bowl;
    out.push_back(make_check("prop-parabolichelicoid", "rho = H/(n-1) over horospheres, sum k_i = H", ok,
                             {{"n", n},
                              {"H", exact::to_string(H_exact)},
                              {"rho", exact::to_string(eb.rho)},
                              {"curvature_sum", exact::to_string(eb.sum)},
                              {"cmc", cmc.witness}}));
  }
  {
    const jacobi::ShapeSpec spec = geometry::bowl_spec(n, H);
    const std::vector<double> base = sorted_eigenvalues(spec.a);
    double worst = 0.0;
    for (double r : {-0.5, 0.3, 1.0, 2.0}) {
      const std::vector<double> ev = sorted_eigenvalues(jacobi::shape_of_parallel(spec, r));
      for (std::size_t i = 0; i < ev.size(); ++i) worst = std::max(worst, std::abs(ev[i] - base[i]));
    }
    out.push_back(make_check("prop-parabolichelicoid parallels", "parallels of a bowl keep its principal curvatures",
                             worst <= 1e-9, {{"n", n}, {"max_deviation", worst}}));
  }
  {
    const geometry::ParallelFamily horo = geometry::horosphere_family(n);
    const double target = H / (n - 1);
    bool ok = true;
    nlohmann::json runs = nlohmann::json::array();
    for (double y0 : {-0.9, -0.3, 0.0, 0.5, 0.95}) {
      const geometry::GraphProfile p = geometry::ode_solve(horo, H, y0, 0.0, 4.0);
      bool monotone = true;
      for (std::size_t i = 1; i < p.rho.size(); ++i)
        monotone = monotone && std::abs(p.rho[i] - target) <= std::abs(p.rho[i - 1] - target);
      const double final_gap = std::abs(p.rho.back() - target);
      const bool decays = y0 == target || final_gap < std::abs(y0 - target);
      const ClaimCheck cmc = geometry::cmc_check(p, H, tol.cmc);
      ok = ok && monotone && decays && cmc.ok();
      runs.push_back({{"y0", y0}, {"final_gap", final_gap}, {"monotone", monotone}, {"cmc_residual", cmc.witness["max_residual"]}});
    }
    out.push_back(make_check("lem-parallel", "horosphere ODE solutions approach H/(n-1)", ok,
                             {{"n", n}, {"H", H}, {"runs", runs}}));
  }
  {
    std::vector<std::pair<geometry::ParallelFamily, std::array<double, 3>>> odes;
    odes.push_back({geometry::geodesic_sphere_family(n, -1), {1.0, 0.1, 0.5}});
    odes.push_back({geometry::equidistant_family(n), {0.5, -0.2, -1.0}});
    odes.push_back({geometry::geodesic_sphere_family(n, 1), {0.4, 0.0, 0.6}});
    if (n >= 3) odes.push_back({geometry::clifford_family(n, 1), {0.7, -0.3, 0.2}});
    for (const auto& [fam, args] : odes) {
      const auto [h, y0, s0] = args;
      try {
        const geometry::GraphProfile p = geometry::ode_solve(fam, h, y0, s0, s0 + 1.0);
        out.push_back(geometry::cmc_check(p, h, tol.cmc));
      } catch (const DegenerationError& e) {
        out.push_back(make_check("eq-ode", "sum k_i = -rho H^s + rho' = H", false,
                                 {{"family", fam.id}, {"error", e.what()}, {"at", e.location()}}));
      }
    }
  }
  {
    double worst = 0.0;
    nlohmann::json fams = nlohmann::json::array();
    for (const auto& fam : geometry::catalog(n)) {
      const double s0 = interior_point(fam);
      const jacobi::ShapeSpec spec = geometry::cylinder_spec(fam, s0);
      for (double r : {0.1, 0.25}) {
        std::vector<double> want = fam.principal_curvatures(s0 + r);
        want.push_back(0.0);
        std::sort(want.begin(), want.end());
        const std::vector<double> got = sorted_eigenvalues(jacobi::shape_of_parallel(spec, r));
        for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
      }
      fams.push_back(fam.id);
    }
    out.push_back(make_check("prop-constantangle", "parallels of a vertical cylinder are cylinders over parallels",
                             worst <= 1e-9, {{"n", n}, {"families", fams}, {"max_deviation", worst}}));
  }
  return out;
}

ClaimCheck classify_table_check() {
  using geometry::ClassTag;
  using geometry::FamilyKind;
  using geometry::LevelDescriptor;
  struct Case {
    int n, eps;
    double theta;
    LevelDescriptor d;
    ClassTag want;
  };
  const double r3 = std::sqrt(3.0) / 2;
  const std::vector<Case> cases{
      {3, -1, 1.0, {}, ClassTag::slice},
      {4, 1, -1.0, {}, ClassTag::slice},
      {3, -1, 0.0, {FamilyKind::geodesic_sphere, "geodesic_sphere", {}, {}, {}}, ClassTag::vertical_cylinder},
      {4, 1, 0.0, {FamilyKind::clifford, "clifford_1", {}, {}, {}}, ClassTag::vertical_cylinder},
      {3, 1, 0.0, {FamilyKind::sphere_in_sn, "sphere_in_sn", {}, {}, {}}, ClassTag::vertical_cylinder},
      {3, -1, 0.0, {}, ClassTag::non_isoparametric},
      {3, -1, r3, {FamilyKind::horosphere, "horosphere", 0.5, 1.0, {}}, ClassTag::parabolic_bowl},
      {5, -1, r3, {FamilyKind::horosphere, "horosphere", 0.5, 2.0, {}}, ClassTag::parabolic_bowl},
      {3, -1, r3, {FamilyKind::horosphere, "horosphere", 0.5, 0.5, {}}, ClassTag::non_isoparametric},
      {3, -1, 0.6, {FamilyKind::equidistant, "equidistant", 0.8, 1.0, {}}, ClassTag::non_isoparametric},
      {3, 1, 0.5, {FamilyKind::sphere_in_sn, "sphere_in_sn", r3, 1.0, {}}, ClassTag::non_isoparametric},
      {3, 1, 0.5, {}, ClassTag::non_isoparametric},
  };
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : cases) {
    const geometry::HypersurfaceClass got = geometry::classify(c.n, c.eps, c.theta, c.d);
    ok = ok && got.tag == c.want;
    rows.push_back({{"n", c.n},
                    {"epsilon", c.eps},
                    {"theta", c.theta},
                    {"got", geometry::to_string(got.tag)},
                    {"expected", geometry::to_string(c.want)}});
  }
  return make_check("thm-main", "slice / vertical cylinder / parabolic bowl classification", ok, {{"cases", rows}});
}

Report run_verify(const RunConfig& config) {
  config.validate();
  kac::pin_row_power_offset();
  Report rep;
  rep.config = config.to_json();
  const std::vector<Rational> taus = config.tau_samples.empty() ? default_tau_samples() : config.tau_samples;

  auto run = [&](const std::string& fallback_claim, const std::function<CheckList()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckList checks;
    try {
      checks = body();
    } catch (const std::exception& e) {
      checks = {make_check(fallback_claim, "check raised", false, {{"error", e.what()}})};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (auto& c : checks) rep.records.push_back({std::move(c), config.timings ? ms : 0.0});
  };
  auto one = [](ClaimCheck c) { return CheckList{std::move(c)}; };

  std::vector<int> ns = config.n_range;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  for (int n : ns) {
    const int k_max = config.k_max > 0 ? config.k_max : default_k_max(n);
    if (n <= 5) run("examp-Zmatrices", [&] { return one(golden_z_check(n)); });
    run("eq-linearcombination", [&] { return one(coeffs::cross_derivation_check(n, std::min(k_max, 12))); });
    if (n >= 3) run(n == 3 ? "eq-rec3" : "lem-coeff", [&] { return one(stated_recursion_check(n, k_max)); });
    if (n == 3) {
      const int k3 = config.k_max > 0 ? config.k_max : 40;
      run("prop-coeff3", [&] { return coeffs::closed_form_n3_check(k3); });
      run("prop-coeff3(iv) q_{3,0}", [&] { return one(q30_display_check()); });
    }
    if (n >= 4) run("prop-p&q", [&] { return coeffs::structure_check(coeffs::pq_table(n, k_max)); });
    run("kac-lemma", [&] { return kac_checks(n, k_max, taus, config.tol.spectrum); });

    if (n % 2 == 0) {
      run("prop-crucialrole(i)", [&] {
        CheckList parts;
        for (int s : {0, 1, 2}) parts.push_back(kac::even_independence_check(n, s));
        return one(merge("prop-crucialrole(i)", parts.front().paper_ref, parts));
      });
    }
    std::vector<int> odd_s;
    if (n % 2 == 1) {
      for (int s : config.s_values)
        if (s >= 2 * n) odd_s.push_back(s);
      if (odd_s.empty()) odd_s = {2 * n, 2 * n + 2};
      run("prop-crucialrole(ii)", [&] {
        CheckList dep, span_b, span_c;
        for (int s : odd_s) {
          dep.push_back(kac::odd_dependence_check(n, s));
          const CheckList spans = kac::odd_column_span_checks(n, s);
          span_b.push_back(spans.at(0));
          span_c.push_back(spans.at(1));
        }
        return CheckList{merge("prop-crucialrole(ii)(a)", dep.front().paper_ref, dep),
                         merge("prop-crucialrole(ii)(b)", span_b.front().paper_ref, span_b),
                         merge("prop-crucialrole(ii)(c)", span_c.front().paper_ref, span_c)};
      });
    }

    if (n == 2) run("eq-n=2", [&] { return determinant_checks_n2(); });
    if (n == 3) run("eq-detM3", [&] { return determinant_checks_n3(config.s_values); });
    if (n <= 6) run("eq-linearsystem det M", [&] { return one(det_m_zero_check(n)); });
    if (n <= 6) {
      if (n % 2 == 0) {
        run("prop-mainlinear(i)", [&] { return detsys::mainlinear_check(n).checks; });
      } else {
        for (int s : odd_s) run("prop-mainlinear(ii)", [&] { return detsys::mainlinear_check(n, s).checks; });
      }
    }

    run("eq-fderivativesagain", [&] { return jacobi_checks(n, config.tol); });
    run("eq-ode", [&] { return geometry_checks(n, config.tol); });
  }
  run("thm-main", [&] { return one(classify_table_check()); });
  return rep;
}

}  // namespace isoparam::verify

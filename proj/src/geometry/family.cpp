#include <isoparam/errors.hpp>
#include <isoparam/geometry/family.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace isoparam::geometry {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_n(int n) {
  if (n < 2) throw PreconditionError("parallel family: n must be >= 2");
}

CurvatureGroup group(int mult, std::function<Jet(double, std::size_t)> jet) { return {mult, std::move(jet)}; }

Jet neg_coth(double s, std::size_t len) { return -(jacobi::cosh_jet(s, len) / jacobi::sinh_jet(s, len)); }
Jet neg_tanh(double s, std::size_t len) { return -(jacobi::sinh_jet(s, len) / jacobi::cosh_jet(s, len)); }
Jet tan_(double s, std::size_t len) { return jacobi::sin_jet(s, len) / jacobi::cos_jet(s, len); }
Jet neg_cot(double s, std::size_t len) { return -(jacobi::cos_jet(s, len) / jacobi::sin_jet(s, len)); }

}  // namespace

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::horosphere: return "horosphere";
    case FamilyKind::geodesic_sphere: return "geodesic_sphere";
    case FamilyKind::equidistant: return "equidistant";
    case FamilyKind::totally_geodesic: return "totally_geodesic";
    case FamilyKind::sphere_in_sn: return "sphere_in_sn";
    case FamilyKind::clifford: return "clifford";
    case FamilyKind::custom: return "custom";
  }
  return "custom";
}

std::vector<double> ParallelFamily::principal_curvatures(double s) const {
  if (!contains(s)) throw PreconditionError("parallel family " + id + ": s outside the domain");
  std::vector<double> k;
  for (const auto& g : groups) {
    const double v = g.jet(s, 1)[0];
    for (int i = 0; i < g.multiplicity; ++i) k.push_back(v);
  }
  return k;
}

double ParallelFamily::mean_curvature(double s) const {
  double h = 0.0;
  for (double v : principal_curvatures(s)) h += v;
  return h;
}

Jet ParallelFamily::mean_curvature_jet(double s0, std::size_t length) const {
  if (!contains(s0)) throw PreconditionError("parallel family " + id + ": s outside the domain");
  Jet h = Jet::constant(0.0, length);
  for (const auto& g : groups) h += static_cast<double>(g.multiplicity) * g.jet(s0, length);
  return h;
}

// Level sets of a Busemann function; k = -1 with the normal pointing along
// increasing s (Busemann gradient).
ParallelFamily horosphere_family(int n) {
  require_n(n);
  ParallelFamily f{n, -1, FamilyKind::horosphere, "horosphere", -kInf, kInf, {}, -(n - 1.0)};
  f.groups.push_back(group(n - 1, [](double, std::size_t len) { return Jet::constant(-1.0, len); }));
  return f;
}

// Jacobi fields along a radial geodesic are sn(s) E, so the sphere of radius
// s has k = -sn'/sn for the outward normal: -coth s, -cot s.
ParallelFamily geodesic_sphere_family(int n, int epsilon) {
  require_n(n);
  if (epsilon == -1) {
    ParallelFamily f{n, -1, FamilyKind::geodesic_sphere, "geodesic_sphere", 0.0, kInf, {}, std::nullopt};
    f.groups.push_back(group(n - 1, neg_coth));
    return f;
  }
  if (epsilon != 1) throw PreconditionError("geodesic_sphere_family: epsilon must be +-1");
  ParallelFamily f{n, 1, FamilyKind::sphere_in_sn, "sphere_in_sn", 0.0, std::numbers::pi, {}, std::nullopt};
  f.groups.push_back(group(n - 1, neg_cot));
  return f;
}

// Jacobi fields cosh(s) E off a totally geodesic hyperplane give -tanh s.
ParallelFamily equidistant_family(int n) {
  require_n(n);
  ParallelFamily f{n, -1, FamilyKind::equidistant, "equidistant", -kInf, kInf, {}, std::nullopt};
  f.groups.push_back(group(n - 1, neg_tanh));
  return f;
}

// In S^n the Jacobi fields are cos(s) E, giving k = tan s.
ParallelFamily totally_geodesic_family(int n, int epsilon) {
  require_n(n);
  if (epsilon == -1) {
    ParallelFamily f{n, -1, FamilyKind::totally_geodesic, "totally_geodesic_hn", -kInf, kInf, {}, std::nullopt};
    f.groups.push_back(group(n - 1, neg_tanh));
    return f;
  }
  if (epsilon != 1) throw PreconditionError("totally_geodesic_family: epsilon must be +-1");
  ParallelFamily f{n, 1, FamilyKind::totally_geodesic, "totally_geodesic_sn", -std::numbers::pi / 2,
                   std::numbers::pi / 2, {}, std::nullopt};
  f.groups.push_back(group(n - 1, tan_));
  return f;
}

// The S^p factor has radius cos s and the S^q factor radius sin s; moving
// along increasing s the first shrinks (tan s) and the second grows (-cot s).
ParallelFamily clifford_family(int n, int p) {
  require_n(n);
  const int q = n - 1 - p;
  if (p < 1 || q < 1) throw PreconditionError("clifford_family: need 1 <= p <= n-2");
  ParallelFamily f{n, 1, FamilyKind::clifford, "clifford_" + std::to_string(p), 0.0, std::numbers::pi / 2, {},
                   std::nullopt};
  f.groups.push_back(group(p, tan_));
  f.groups.push_back(group(q, neg_cot));
  return f;
}

ParallelFamily reversed(const ParallelFamily& f) {
  ParallelFamily r = f;
  r.id = f.id + ":reversed";
  for (auto& g : r.groups) {
    auto inner = g.jet;
    g.jet = [inner](double s, std::size_t len) { return -inner(s, len); };
  }
  if (r.constant_mean) r.constant_mean = -*r.constant_mean;
  return r;
}

std::vector<ParallelFamily> catalog(int n) {
  std::vector<ParallelFamily> out{horosphere_family(n),         geodesic_sphere_family(n, -1),
                                  equidistant_family(n),        totally_geodesic_family(n, -1),
                                  geodesic_sphere_family(n, 1), totally_geodesic_family(n, 1)};
  for (int p = 1; p <= n - 2; ++p) out.push_back(clifford_family(n, p));
  return out;
}

ParallelFamily family_by_id(int n, const std::string& id) {
  for (auto& f : catalog(n))
    if (f.id == id) return f;
  const std::string suffix = ":reversed";
  if (id.size() > suffix.size() && id.ends_with(suffix)) return reversed(family_by_id(n, id.substr(0, id.size() - suffix.size())));
  throw PreconditionError("unknown family id: " + id);
}

jacobi::ShapeSpec cylinder_spec(const ParallelFamily& f, double s0) {
  const std::vector<double> k = f.principal_curvatures(s0);
  jacobi::ShapeSpec spec{f.n, f.epsilon, 0.0, Eigen::MatrixXd::Zero(f.n, f.n)};
  for (int i = 1; i < f.n; ++i) spec.a(i, i) = k[i - 1];
  return spec;
}

nlohmann::json to_json(const ParallelFamily& f) {
  auto bound = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : f.groups) groups.push_back({{"multiplicity", g.multiplicity}});
  nlohmann::json j{{"id", f.id},      {"kind", to_string(f.kind)}, {"n", f.n}, {"epsilon", f.epsilon},
                   {"domain", {bound(f.lo), bound(f.hi)}}, {"groups", groups}};
  j["constant_mean"] = f.constant_mean ? nlohmann::json(*f.constant_mean) : nlohmann::json(nullptr);
  return j;
}

}  // namespace isoparam::geometry

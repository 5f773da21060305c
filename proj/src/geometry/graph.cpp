#include <isoparam/errors.hpp>
#include <isoparam/exact/serialize.hpp>
#include <isoparam/geometry/graph.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace isoparam::geometry {

namespace {

std::size_t segment(const std::vector<double>& s, double x) {
  if (x < s.front() || x > s.back()) throw PreconditionError("graph profile: s outside the sampled range");
  auto it = std::upper_bound(s.begin(), s.end(), x);
  std::size_t i = static_cast<std::size_t>(it - s.begin());
  return i == 0 ? 0 : std::min(i - 1, s.size() - 2);
}

void check_graph(double y, double s) {
  if (!(std::abs(y) < 1.0)) throw DegenerationError("rho reached |rho| = 1, the graph degenerates", s);
}

}  // namespace

double GraphProfile::rho_at(double x) const {
  const std::size_t i = segment(s, x);
  const double h = s[i + 1] - s[i], t = (x - s[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * rho[i] + (t3 - 2 * t2 + t) * h * drho[i] + (-2 * t3 + 3 * t2) * rho[i + 1] +
         (t3 - t2) * h * drho[i + 1];
}

double GraphProfile::rho_prime_at(double x) const {
  const std::size_t i = segment(s, x);
  const double h = s[i + 1] - s[i], t = (x - s[i]) / h;
  const double t2 = t * t;
  return ((6 * t2 - 6 * t) * rho[i] + (6 * t - 6 * t2) * rho[i + 1]) / h + (3 * t2 - 4 * t + 1) * drho[i] +
         (3 * t2 - 2 * t) * drho[i + 1];
}

double GraphProfile::theta_at(double x) const {
  const double r = rho_at(x);
  check_graph(r, x);
  return std::sqrt(1.0 - r * r);
}

GraphProfile make_profile(const ParallelFamily& f, std::vector<double> s, std::vector<double> rho,
                          std::vector<double> drho) {
  if (s.size() < 2 || rho.size() != s.size() || drho.size() != s.size())
    throw PreconditionError("make_profile: need >= 2 knots with matching rho and rho'");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && !(s[i] > s[i - 1])) throw PreconditionError("make_profile: knots must increase");
    if (!f.contains(s[i])) throw PreconditionError("make_profile: knot outside the family domain");
    check_graph(rho[i], s[i]);
  }
  return GraphProfile{f, std::move(s), std::move(rho), std::move(drho), std::nullopt};
}

GraphProfile sampled_profile(const ParallelFamily& f, std::vector<double> s, std::vector<double> rho) {
  const std::size_t m = s.size();
  if (m < 3 || rho.size() != m) throw PreconditionError("sampled_profile: need >= 3 knots");
  std::vector<double> d(m);
  // Quadratic through three neighbours, differentiated at the requested knot.
  auto three_point = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t at) {
    const double x = s[at];
    const double la = ((x - s[b]) + (x - s[c])) / ((s[a] - s[b]) * (s[a] - s[c]));
    const double lb = ((x - s[a]) + (x - s[c])) / ((s[b] - s[a]) * (s[b] - s[c]));
    const double lc = ((x - s[a]) + (x - s[b])) / ((s[c] - s[a]) * (s[c] - s[b]));
    return la * rho[a] + lb * rho[b] + lc * rho[c];
  };
  d[0] = three_point(0, 1, 2, 0);
  for (std::size_t i = 1; i + 1 < m; ++i) d[i] = three_point(i - 1, i, i + 1, i);
  d[m - 1] = three_point(m - 3, m - 2, m - 1, m - 1);
  return make_profile(f, std::move(s), std::move(rho), std::move(d));
}

GraphProfile ode_solve(const ParallelFamily& f, double H, double y0, double s0, double s1, double step) {
  if (!(std::abs(y0) < 1.0)) throw PreconditionError("ode_solve: need |y0| < 1");
  if (!(s1 > s0) || !(step > 0)) throw PreconditionError("ode_solve: need s0 < s1 and step > 0");
  if (!f.contains(s0) || !f.contains(s1)) throw PreconditionError("ode_solve: interval outside the family domain");

  const std::size_t steps = static_cast<std::size_t>(std::ceil((s1 - s0) / step));
  std::vector<double> grid(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) grid[i] = s0 + (s1 - s0) * static_cast<double>(i) / static_cast<double>(steps);
  grid.back() = s1;

  std::vector<double> ys, ds;
  ys.reserve(grid.size());
  ds.reserve(grid.size());
  auto rhs_at = [&](double s, double y) { return f.mean_curvature(s) * y + H; };

  if (f.constant_mean) {
    const double c = *f.constant_mean;
    for (double s : grid) {
      const double u = s - s0;
      const double y = c != 0.0 ? (y0 + H / c) * std::exp(c * u) - H / c : y0 + H * u;
      check_graph(y, s);
      ys.push_back(y);
      ds.push_back(c * y + H);
    }
  } else {
    namespace odeint = boost::numeric::odeint;
    using State = std::array<double, 1>;
    auto rhs = [&](const State& y, State& dy, double s) { dy[0] = rhs_at(s, y[0]); };
    auto observer = [&](const State& y, double s) {
      check_graph(y[0], s);
      ys.push_back(y[0]);
      ds.push_back(rhs_at(s, y[0]));
    };
    State y{y0};
    auto stepper = odeint::make_controlled(1e-12, 1e-10, odeint::runge_kutta_dopri5<State>());
    odeint::integrate_times(stepper, rhs, y, grid.begin(), grid.end(), step, observer);
  }
  GraphProfile p = make_profile(f, grid, std::move(ys), std::move(ds));
  p.H = H;
  return p;
}

double rho_to_height(const GraphProfile& p, double s0, double s) {
  if (s0 == s) return 0.0;
  const double a = std::min(s0, s), b = std::max(s0, s);
  // Knots inside the interval: a degenerate sample makes the integral meaningless.
  for (std::size_t i = 0; i < p.s.size(); ++i)
    if (p.s[i] >= a && p.s[i] <= b) check_graph(p.rho[i], p.s[i]);
  auto integrand = [&](double u) {
    const double r = p.rho_at(u);
    check_graph(r, u);
    return r / std::sqrt(1.0 - r * r);
  };
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, a, b, 15, 1e-13, &err);
  if (err > 1e-10) throw VerificationError("rho_to_height: quadrature error estimate above 1e-10");
  return s >= s0 ? v : -v;
}

std::vector<double> graph_curvatures(const GraphProfile& p, double s) {
  const double r = p.rho_at(s);
  std::vector<double> k;
  for (double ks : p.family.principal_curvatures(s)) k.push_back(-r * ks);
  k.push_back(p.H ? p.family.mean_curvature(s) * r + *p.H : p.rho_prime_at(s));
  return k;
}

ClaimCheck cmc_check(const GraphProfile& p, double H, double tol) {
  constexpr int kSamples = 50;
  double worst = 0.0, worst_theta = 0.0, worst_at = p.lo();
  // Knot midpoints, where the interpolant is least constrained.
  const std::size_t segs = p.s.size() - 1;
  for (int j = 0; j < kSamples; ++j) {
    const std::size_t i = std::min(segs - 1, static_cast<std::size_t>((j + 0.5) * static_cast<double>(segs) / kSamples));
    const double s = 0.5 * (p.s[i] + p.s[i + 1]);
    const double r = p.rho_at(s);
    double sum = p.rho_prime_at(s);
    for (double ks : p.family.principal_curvatures(s)) sum += -r * ks;
    const double res = std::abs(sum - H);
    if (res > worst) {
      worst = res;
      worst_at = s;
    }
    const double th = p.theta_at(s);
    worst_theta = std::max(worst_theta, std::abs(r * r + th * th - 1.0));
  }
  const bool ok = worst <= tol && worst_theta <= 1e-12;
  return make_check("eq-ode", "sum k_i = -rho H^s + rho' = H", ok,
                    {{"family", p.family.id}, {"H", H}, {"samples", kSamples}, {"tol", tol}, {"max_residual", worst},
                     {"worst_s", worst_at}, {"max_theta_residual", worst_theta}});
}

Bowl bowl(int n, double H) {
  if (n < 2) throw PreconditionError("bowl: n must be >= 2");
  if (!(H > 0.0 && H < n - 1.0)) throw PreconditionError("bowl: need 0 < H < n - 1");
  const double rho = H / (n - 1.0);
  const ParallelFamily f = horosphere_family(n);
  std::vector<double> s;
  for (int i = -20; i <= 20; ++i) s.push_back(0.1 * i);
  GraphProfile p = make_profile(f, s, std::vector<double>(s.size(), rho), std::vector<double>(s.size(), 0.0));
  p.H = H;
  HypersurfaceClass cls{ClassTag::parabolic_bowl, std::nullopt, f.id, H, "constant rho over horospheres"};
  return Bowl{std::move(p), std::move(cls), rho, std::sqrt(1.0 - rho * rho)};
}

ExactBowl bowl_exact(int n, const exact::Rational& H) {
  if (n < 2) throw PreconditionError("bowl: n must be >= 2");
  if (!(H > 0 && H < n - 1)) throw PreconditionError("bowl: need 0 < H < n - 1");
  ExactBowl b;
  b.rho = H / exact::Rational(n - 1);
  // k_i^s = -1 on horospheres, rho' = 0.
  b.curvatures.assign(n - 1, b.rho);
  b.curvatures.push_back(exact::Rational(0));
  b.sum = 0;
  for (const auto& k : b.curvatures) b.sum += k;
  return b;
}

jacobi::ShapeSpec bowl_spec(int n, double H) {
  const Bowl b = bowl(n, H);
  jacobi::ShapeSpec spec{n, -1, b.theta, Eigen::MatrixXd::Zero(n, n)};
  for (int i = 1; i < n; ++i) spec.a(i, i) = b.rho;
  return spec;
}

nlohmann::json profile_table(const GraphProfile& p, int count) {
  if (count < 2) throw PreconditionError("profile_table: need >= 2 rows");
  nlohmann::json rows = nlohmann::json::array();
  for (int j = 0; j < count; ++j) {
    const double s = p.lo() + (p.hi() - p.lo()) * j / (count - 1);
    nlohmann::json row{{"s", s},
                       {"rho", p.rho_at(s)},
                       {"theta", p.theta_at(s)},
                       {"phi", rho_to_height(p, p.lo(), s)},
                       {"k", graph_curvatures(p, s)}};
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string profile_csv(const GraphProfile& p, int count) {
  const nlohmann::json rows = profile_table(p, count);
  std::vector<std::string> header{"s", "rho", "theta", "phi"};
  for (int i = 1; i <= p.family.n; ++i) header.push_back("k" + std::to_string(i));
  std::ostringstream out;
  out << exact::csv_line(header) << "\n";
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    auto num = [](double v) {
      std::ostringstream o;
      o.precision(17);
      o << v;
      return o.str();
    };
    cells.push_back(num(row["s"]));
    cells.push_back(num(row["rho"]));
    cells.push_back(num(row["theta"]));
    cells.push_back(num(row["phi"]));
    for (const auto& k : row["k"]) cells.push_back(num(k));
    out << exact::csv_line(cells) << "\n";
  }
  return out.str();
}

}  // namespace isoparam::geometry

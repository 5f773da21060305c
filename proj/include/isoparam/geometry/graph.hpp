#pragma once

#include <isoparam/check.hpp>
#include <isoparam/exact/rational.hpp>
#include <isoparam/geometry/classify.hpp>
#include <isoparam/geometry/family.hpp>

#include <optional>
#include <vector>

namespace isoparam::geometry {

// rho-function of an (M_s, phi)-graph on a knot grid; cubic Hermite in between.
struct GraphProfile {
  ParallelFamily family;
  std::vector<double> s;
  std::vector<double> rho;
  std::vector<double> drho;
  // Set when the profile solves y' = H^s y + H.
  std::optional<double> H;

  double lo() const { return s.front(); }
  double hi() const { return s.back(); }
  double rho_at(double x) const;
  // Derivative of the interpolant.
  double rho_prime_at(double x) const;
  // sqrt(1 - rho^2)
  double theta_at(double x) const;
};

// Knots must be strictly increasing and inside the family domain.
GraphProfile make_profile(const ParallelFamily& f, std::vector<double> s, std::vector<double> rho,
                          std::vector<double> drho);
// Slopes from three-point differences.
GraphProfile sampled_profile(const ParallelFamily& f, std::vector<double> s, std::vector<double> rho);

// y' = H^s y + H on [s0, s1]. Closed form when H^s is constant, otherwise
// dopri5 with dense output (rtol 1e-10) sampled every ~step.
// Throws DegenerationError once |y| reaches 1.
GraphProfile ode_solve(const ParallelFamily& f, double H, double y0, double s0, double s1, double step = 1e-3);

// phi(s) - phi(s0) = int rho / sqrt(1 - rho^2).
double rho_to_height(const GraphProfile& p, double s0, double s);

// (-rho k_1^s, ..., -rho k_(n-1)^s, rho').
std::vector<double> graph_curvatures(const GraphProfile& p, double s);

// Sum of curvatures against H at 50 interior points, rho' from the
// interpolant; also rho^2 + theta^2 = 1.
ClaimCheck cmc_check(const GraphProfile& p, double H, double tol = 1e-8);

struct Bowl {
  GraphProfile profile;
  HypersurfaceClass cls;
  double rho = 0.0;
  double theta = 0.0;
};

// 0 < H < n - 1; rho = H/(n-1) over horospheres.
Bowl bowl(int n, double H);

struct ExactBowl {
  exact::Rational rho;
  std::vector<exact::Rational> curvatures;
  exact::Rational sum;
};
ExactBowl bowl_exact(int n, const exact::Rational& H);

// eps = -1, theta = sqrt(1 - rho^2), a = diag(0, rho, ..., rho).
jacobi::ShapeSpec bowl_spec(int n, double H);

// Rows {s, rho, theta, phi, k_1..k_n} at `count` evenly spaced points.
nlohmann::json profile_table(const GraphProfile& p, int count);
std::string profile_csv(const GraphProfile& p, int count);

}  // namespace isoparam::geometry

#pragma once

#include <isoparam/check.hpp>
#include <isoparam/jacobi/jet.hpp>

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace isoparam::jacobi {

// One point of a hypersurface in Q_eps^n x R: ambient sign, angle
// theta = <N, d/dt>, and the shape operator in the frame U_1 = T/|T|,
// U_2..U_n horizontal.
struct ShapeSpec {
  int n = 0;
  int epsilon = -1;
  double theta = 0.0;
  Eigen::MatrixXd a;

  // -eps (1 - theta^2)
  double tau() const { return -epsilon * (1.0 - theta * theta); }
  // Throws PreconditionError on n < 2, eps not +-1, |theta| >= 1, bad a.
  void validate() const;
};

// (s_tau(r), c_tau(r)); hyperbolic for tau > 0, trigonometric for tau < 0.
std::pair<double, double> sc_eval(double tau, double r);

struct BC {
  Eigen::MatrixXd B;
  Eigen::MatrixXd C;  // B'
};

// Row 1: delta_1j - a_1j r. Rows i >= 2: delta_ij c(r) - a_ij s(r).
BC b_solution(const ShapeSpec& spec, double r);

// A^r = -C B^-1. Throws FocalPointError when |det B| < 1e-12 * scale^n.
Eigen::MatrixXd shape_of_parallel(const ShapeSpec& spec, double r);

// D(r) = sum_l (alpha[l] + beta[l] r) s^l c^(n-1-l).
struct DFormula {
  int n = 0;
  double tau = 0.0;
  std::vector<double> alpha;
  std::vector<double> beta;

  double evaluate(double r) const;
  // The k-th derivative formula, obtained by k recursion steps.
  DFormula derivative(int k = 1) const;
};

// Cofactor expansion of det B along its first row. Throws VerificationError
// if the formula misses det B(r) by more than 1e-10 (relative) at 20 samples.
DFormula dformula_extract(const ShapeSpec& spec);

struct DH {
  double D = 0.0;
  double D_prime = 0.0;
  double H = 0.0;        // -D'/D
  double trace_H = 0.0;  // trace A^r
};

// Throws FocalPointError at focal r, VerificationError if the two H differ by
// more than 1e-9 (relative).
DH d_and_h(const ShapeSpec& spec, double r);

// Jet of D(r0 + h) from the Jacobi solutions; Laplace expansion, n <= 8.
Jet d_jet(const ShapeSpec& spec, double r0, std::size_t length = Jet::kDefaultOrder + 1);

// d_k = -phi_k(0), phi_0 = H, phi_(k+1) = phi_k' - H phi_k.
// Result index k holds d_k for k = 0..k_max. Needs h_jet.length() > k_max.
std::vector<double> d_constants(const Jet& h_jet, int k_max);

// R(X,Y)Z = eps (<X^h, Z^h> Y^h - <Y^h, Z^h> X^h); the last component of each
// vector is vertical.
Eigen::VectorXd curvature_term(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& z,
                               int epsilon);

// alpha_{0,k+1} (recursion seeded by the D formula, and separately by the
// exact p/q rows) against d_k from the H jet, k = 0..k_max.
CheckList alpha0_consistency(const ShapeSpec& spec, const Jet& h_jet, int k_max, double tol = 1e-7);

// Rows {r, D, H, eigenvalues of A^r}.
nlohmann::json parallel_table(const ShapeSpec& spec, const std::vector<double>& rs);

}  // namespace isoparam::jacobi

#pragma once

#include <isoparam/check.hpp>
#include <isoparam/exact/rational.hpp>

#include <vector>

namespace isoparam::kac {

// Numeric spectral checks of K and Q at tau = sign * t^2.
struct SpectrumReport {
  double tau = 0.0;
  double max_eigenvalue_error = 0.0;
  // Real branch only; zero otherwise.
  double max_generalized_residual = 0.0;
  double min_e1_coordinate = 0.0;
  bool real_branch = true;
  bool passed = false;
};

// tau > 0: eigenvalues (n-1-2l) sqrt(tau), left eigenvectors v_l of K and
// x_l = (v_l, 0), y_l = (0, v_l) with x_l Q = l_l x_l + y_l, y_l Q = l_l y_l;
// e_1 has no vanishing coordinate over {v_l}.
// tau < 0: eigenvalues +-i m sqrt(|tau|), no eigenvector checks.
SpectrumReport spectrum_check(int n, const exact::Rational& tau, double tol = 1e-9);

// c^(n-1)(x) = 2^(1-n) sum_l C(n-1, l) exp((n-1-2l) sqrt(tau) x) at sampled x,
// complex exponentials when tau < 0.
double binomial_expansion_residual(int n, double tau, const std::vector<double>& xs);

}  // namespace isoparam::kac

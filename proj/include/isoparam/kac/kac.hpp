#pragma once

#include <isoparam/check.hpp>
#include <isoparam/exact/poly_matrix.hpp>

#include <vector>

namespace isoparam::kac {

using exact::PolyMatrix;
using exact::TauPoly;

// Tridiagonal n x n matrix of d/dx on the basis s^l c^(n-1-l); 1-based
// k(i, i+1) = i, k(i, i-1) = (n-i+1) tau.
struct KacMatrix {
  int n = 0;
  PolyMatrix entries;
};

// [[K, I], [0, K]], 2n x 2n.
struct QMatrix {
  int n = 0;
  PolyMatrix entries;
};

KacMatrix build_kac(int n);
QMatrix build_q(int n);

// Coefficients c[0..n] of det(x I - K), lowest degree first.
using XPoly = std::vector<TauPoly>;

// Throws VerificationError unless the result equals
// x^(n mod 2) * prod_{0 < m <= n-1, m = n-1 mod 2} (x^2 - m^2 tau).
XPoly char_poly(const KacMatrix& k);
XPoly expected_char_poly(int n);
std::string to_string(const XPoly& p);

std::size_t kac_rank(const KacMatrix& k);

// (e_1, 0) Q^j by repeated row-matrix products.
std::vector<TauPoly> row_power(int n, int j);

// Z row i equals row_power(n, i + kRowPowerOffset).
inline constexpr int kRowPowerOffset = 1;

// Searches the offsets 0..4 against the printed Z tables (n = 2..5, errata
// excluded) and returns the unique offset that reproduces every row, or -1.
int detect_row_power_offset();
// Startup self-test: throws VerificationError unless detection gives kRowPowerOffset.
void pin_row_power_offset();

// Q^j with the block identity Q^j = [[K^j, j K^(j-1)], [0, K^j]] checked.
PolyMatrix q_block_power(const QMatrix& q, int j);
PolyMatrix matrix_power(const PolyMatrix& m, int j);

// Independence and span claims for the rows e_1 Q^j.
ClaimCheck even_independence_check(int n, int s);
// Rank of Lambda = {e_1 Q^2..e_1 Q^(2n-1)} and Lambda_s = Lambda + {e_1 Q^s}.
ClaimCheck odd_dependence_check(int n, int s);
// C_1 in span(C_3, C_5, .., C_n) and C_(n+1) in span(C_(n+3), .., C_(2n)),
// columns 1-based, of the matrix with rows Lambda_s.
CheckList odd_column_span_checks(int n, int s);

PolyMatrix lambda_matrix(int n, int s);

}  // namespace isoparam::kac

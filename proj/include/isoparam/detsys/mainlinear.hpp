#pragma once

#include <isoparam/check.hpp>
#include <isoparam/detsys/system.hpp>

#include <optional>

namespace isoparam::detsys {

using exact::Rational;

// One monomial mu * d_k * tau^(half_pow/2); d_index 0 is the d-free term.
struct MonomialTerm {
  int d_index = 0;
  Rational mu;
  int half_pow = 0;
};

struct DetStructure {
  std::vector<MonomialTerm> terms;  // d-free term first, then by d index
  bool monomial = true;             // every coefficient a single monomial
  bool integral = true;             // integer mu, whole powers of tau
};

DetStructure read_structure(const DLinear& det);

// Exponents of Z in half-units: row i (1-based) -> i-1; p-column l -> 2-l,
// q-column l -> 1-l. For M these are the same with the first column dropped.
std::vector<int> z_row_half_pows(std::size_t rows);
std::vector<int> z_col_half_pows(int n);

struct MainlinearReport {
  int n = 0;
  std::optional<int> s;
  std::size_t rank = 0;
  int j_star = 0;      // 1-based; 0 when none exists
  DLinear det;         // det M_{j*} (even n) or det M_n(s) (odd n)
  DetStructure structure;
  CheckList checks;
};

// Even n: rank M, j*, monomial structure and exponent chain of det M_{j*}.
// Odd n: rank M(s), det M_j^tau(s) = 0 for all j, and mu_s != 0 in det M_n(s).
// M(s) is M with its last row replaced by L_s.
MainlinearReport mainlinear_check(int n, std::optional<int> s = std::nullopt);

// Closed forms printed for n = 2 and n = 3.
DLinear expected_eq_n2();
DLinear expected_det_m5_n3();
DLinear expected_eq_n3(int s);

}  // namespace isoparam::detsys

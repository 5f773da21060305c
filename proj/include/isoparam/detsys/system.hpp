#pragma once

#include <isoparam/exact/poly_matrix.hpp>

#include <vector>

namespace isoparam::detsys {

using exact::DLinear;
using exact::PolyMatrix;
using exact::TauPoly;

// Augmented system M x = P. Row i is L_k with k = levels[i]:
// (p_{k+1,1..n-1}, q_{k+1,0..n-1} | d_k - p_{k+1,0}).
struct SystemMP {
  int n = 0;
  PolyMatrix Z;                 // [-P_tau | M]
  PolyMatrix M;                 // (2n-1) x (2n-1)
  std::vector<TauPoly> p_tau;
  std::vector<DLinear> p_d;     // d_k
  std::vector<DLinear> p;       // p_tau + p_d
  std::vector<int> levels;

  std::size_t size() const { return M.rows(); }
};

// Rows L_1..L_{2n-1}. Throws VerificationError if Z != [-P_tau | M].
SystemMP assemble_system(int n);

// Same system with its last row replaced by L_level.
SystemMP replace_last_row(const SystemMP& sys, int level);

enum class ColumnSource { full, tau, d };

// det of M with column j (1-based) replaced by P, P_tau or P_d.
DLinear det_mj(const SystemMP& sys, int j, ColumnSource source = ColumnSource::full);
PolyMatrix replaced_matrix(const SystemMP& sys, int j, ColumnSource source = ColumnSource::full);
DLinear det_m(const SystemMP& sys);

// Row-replaced system for n = 3: the last row becomes L_{2s} (even) or
// L_{2s-1} (odd). Any n is accepted.
enum class RowParity { even, odd };
SystemMP mbar_system(int n, int s, RowParity parity);
// j = 0 gives the determinant of the row-replaced matrix itself.
DLinear det_mbar(int n, int s, RowParity parity, int j);

}  // namespace isoparam::detsys

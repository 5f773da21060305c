#pragma once

#include <isoparam/exact/poly_matrix.hpp>

#include <vector>

namespace isoparam::coeffs {

// Z matrices for n = 2..5 exactly as printed in the source tables.
exact::PolyMatrix reference_z(int n);

// Printed entries believed misprinted; 0-based (row, col) in reference_z(n).
struct PrintedErratum {
  int n;
  int row;
  int col;
};
const std::vector<PrintedErratum>& reference_z_errata();

}  // namespace isoparam::coeffs

#pragma once

#include <isoparam/exact/affine_form.hpp>
#include <isoparam/exact/rational_matrix.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace isoparam::exact {

// Dense row-major matrix of DLinear entries; pure TauPoly matrices are the
// special case with no d-symbols anywhere.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<DLinear> entries);

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix from_rows(const std::vector<std::vector<TauPoly>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  DLinear& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const DLinear& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<DLinear>& entries() const { return entries_; }

  // Constant part of entry (i, j); throws if the entry carries d-symbols.
  const TauPoly& poly(std::size_t i, std::size_t j) const;

  bool is_pure() const;
  // Indices of columns containing at least one d-symbol.
  std::vector<std::size_t> symbolic_columns() const;

  std::vector<DLinear> row(std::size_t i) const;
  std::vector<DLinear> column(std::size_t j) const;

  PolyMatrix without_row(std::size_t i) const;
  PolyMatrix without_column(std::size_t j) const;
  PolyMatrix with_column(std::size_t j, const std::vector<DLinear>& col) const;
  PolyMatrix with_row(std::size_t i, const std::vector<DLinear>& r) const;
  PolyMatrix select_columns(std::span<const std::size_t> cols) const;
  PolyMatrix select_rows(std::span<const std::size_t> rows) const;
  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  // Entry-wise value at tau = sqrt_tau^2 with d_k = d_values[k-1].
  RationalMatrix evaluate(const Rational& sqrt_tau, std::span<const Rational> d_values = {}) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<DLinear> entries_;
};

// Pure matrix product; throws PreconditionError on d-symbols or shape mismatch.
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
std::vector<TauPoly> row_times(std::span<const TauPoly> row, const PolyMatrix& m);

// Determinant. Pure matrices use Bareiss fraction-free elimination; a single
// symbolic column is handled by cofactor expansion along that column, so the
// result is affine in the d-symbols. More than one symbolic column throws.
DLinear matrix_det(const PolyMatrix& m);

// Rank over the field of fractions of Q[sqrt(tau)] by fraction-free
// elimination. Pivot: lowest-degree nonzero entry of the current column,
// ties resolved by the smaller row index. Throws on d-symbols.
std::size_t matrix_rank(const PolyMatrix& m);

struct MonomialFactorization {
  RationalMatrix scalars;  // h_ij
  int total_half_pow = 0;  // sum(b) + sum(c), half-units
};

// Splits m_ij = h_ij * tau^((b_i + c_j)/2) (half-unit exponents). Zero entries
// fit any exponent. Throws VerificationError when an entry breaks the pattern.
// Rectangular input is accepted; total_half_pow is only a determinant
// exponent when m is square.
MonomialFactorization monomial_factor(const PolyMatrix& m, std::span<const int> row_half_pows,
                                      std::span<const int> col_half_pows);

}  // namespace isoparam::exact

#include <isoparam/errors.hpp>
#include <isoparam/exact/poly_matrix.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace isoparam::exact {

namespace {

using Grid = std::vector<std::vector<TauPoly>>;

Grid pure_grid(const PolyMatrix& m) {
  Grid g(m.rows(), std::vector<TauPoly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.poly(i, j);
  return g;
}

int degree_of(const TauPoly& p) { return p.max_half_pow().value_or(0); }

// Bareiss fraction-free elimination; every intermediate entry is a minor of
// the input, so each division is exact.
TauPoly bareiss_det(Grid a) {
  const std::size_t n = a.size();
  if (n == 0) return TauPoly(1);
  bool negate = false;
  TauPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) continue;
        if (pivot == n || degree_of(a[i][k]) < degree_of(a[pivot][k])) pivot = i;
      }
      if (pivot == n) return TauPoly();
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_quotient(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = TauPoly();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<DLinear> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw PreconditionError("PolyMatrix: entry count does not match shape");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = DLinear(1);
  return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<TauPoly>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw PreconditionError("PolyMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = DLinear(rows[i][j]);
  }
  return m;
}

const TauPoly& PolyMatrix::poly(std::size_t i, std::size_t j) const {
  const DLinear& e = (*this)(i, j);
  if (!e.is_pure())
    throw PreconditionError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") carries d-symbols");
  return e.constant();
}

bool PolyMatrix::is_pure() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const DLinear& e) { return e.is_pure(); });
}

std::vector<std::size_t> PolyMatrix::symbolic_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i)
      if (!(*this)(i, j).is_pure()) {
        out.push_back(j);
        break;
      }
  return out;
}

std::vector<DLinear> PolyMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<long>(i * cols_), entries_.begin() + static_cast<long>((i + 1) * cols_)};
}

std::vector<DLinear> PolyMatrix::column(std::size_t j) const {
  std::vector<DLinear> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

PolyMatrix PolyMatrix::without_row(std::size_t skip) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows_; ++i)
    if (i != skip) keep.push_back(i);
  return select_rows(keep);
}

PolyMatrix PolyMatrix::without_column(std::size_t skip) const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols_; ++j)
    if (j != skip) keep.push_back(j);
  return select_columns(keep);
}

PolyMatrix PolyMatrix::with_column(std::size_t j, const std::vector<DLinear>& col) const {
  if (j >= cols_ || col.size() != rows_) throw PreconditionError("with_column: shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out(i, j) = col[i];
  return out;
}

PolyMatrix PolyMatrix::with_row(std::size_t i, const std::vector<DLinear>& r) const {
  if (i >= rows_ || r.size() != cols_) throw PreconditionError("with_row: shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t j = 0; j < cols_; ++j) out(i, j) = r[j];
  return out;
}

PolyMatrix PolyMatrix::select_columns(std::span<const std::size_t> cols) const {
  std::vector<std::size_t> all(rows_);
  for (std::size_t i = 0; i < rows_; ++i) all[i] = i;
  return submatrix(all, cols);
}

PolyMatrix PolyMatrix::select_rows(std::span<const std::size_t> rows) const {
  std::vector<std::size_t> all(cols_);
  for (std::size_t j = 0; j < cols_; ++j) all[j] = j;
  return submatrix(rows, all);
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_) throw PreconditionError("submatrix: index out of range");
      out(i, j) = (*this)(rows[i], cols[j]);
    }
  return out;
}

RationalMatrix PolyMatrix::evaluate(const Rational& sqrt_tau, std::span<const Rational> d_values) const {
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const DLinear& e = (*this)(i, j);
      Rational v = e.constant().evaluate(sqrt_tau);
      for (const auto& [k, c] : e.coeffs()) {
        if (k < 1 || static_cast<std::size_t>(k) > d_values.size())
          throw PreconditionError("evaluate: no value supplied for d" + std::to_string(k));
        v += c.evaluate(sqrt_tau) * d_values[k - 1];
      }
      out(i, j) = v;
    }
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product: shape mismatch");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      TauPoly acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const TauPoly& x = a.poly(i, k);
        if (x.is_zero()) continue;
        const TauPoly& y = b.poly(k, j);
        if (!y.is_zero()) acc += x * y;
      }
      out(i, j) = DLinear(acc);
    }
  return out;
}

std::vector<TauPoly> row_times(std::span<const TauPoly> row, const PolyMatrix& m) {
  if (row.size() != m.rows()) throw PreconditionError("row_times: shape mismatch");
  std::vector<TauPoly> out(m.cols());
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const TauPoly& y = m.poly(k, j);
      if (!y.is_zero()) out[j] += row[k] * y;
    }
  }
  return out;
}

DLinear matrix_det(const PolyMatrix& m) {
  if (!m.is_square()) throw PreconditionError("matrix_det: matrix is not square");
  const auto symbolic = m.symbolic_columns();
  if (symbolic.empty()) return DLinear(bareiss_det(pure_grid(m)));
  if (symbolic.size() > 1)
    throw PreconditionError("matrix_det: " + std::to_string(symbolic.size()) +
                            " columns carry d-symbols; at most one is supported");

  const std::size_t c = symbolic.front();
  const PolyMatrix rest = m.without_column(c);
  DLinear det;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const DLinear& entry = m(i, c);
    if (entry.is_zero()) continue;
    TauPoly minor = bareiss_det(pure_grid(rest.without_row(i)));
    if (minor.is_zero()) continue;
    if ((i + c) % 2 == 1) minor = -minor;
    det += entry * minor;
  }
  return det;
}

std::size_t matrix_rank(const PolyMatrix& m) {
  if (!m.is_pure()) throw PreconditionError("matrix_rank: entries carry d-symbols");
  Grid a = pure_grid(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  TauPoly prev(1);
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][col].is_zero()) continue;
      if (pivot == rows || degree_of(a[i][col]) < degree_of(a[pivot][col])) pivot = i;
    }
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        a[i][j] = exact_quotient(a[r][col] * a[i][j] - a[i][col] * a[r][j], prev);
      a[i][col] = TauPoly();
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

MonomialFactorization monomial_factor(const PolyMatrix& m, std::span<const int> row_half_pows,
                                      std::span<const int> col_half_pows) {
  if (row_half_pows.size() != m.rows() || col_half_pows.size() != m.cols())
    throw PreconditionError("monomial_factor: exponent lists do not match the matrix shape");
  MonomialFactorization out{RationalMatrix(m.rows(), m.cols()), 0};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const TauPoly& e = m.poly(i, j);
      if (e.is_zero()) continue;
      const int expected = row_half_pows[i] + col_half_pows[j];
      if (!e.is_monomial() || e.terms().begin()->first != expected)
        throw VerificationError("monomial_factor: entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                e.str() + " is not a multiple of tau^(" + std::to_string(expected) + "/2)");
      out.scalars(i, j) = e.terms().begin()->second;
    }
  for (int b : row_half_pows) out.total_half_pow += b;
  for (int c : col_half_pows) out.total_half_pow += c;
  return out;
}

}  // namespace isoparam::exact

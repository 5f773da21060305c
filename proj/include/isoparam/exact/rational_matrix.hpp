#pragma once

#include <isoparam/exact/rational.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace isoparam::exact {

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Gaussian elimination with exact pivoting.
Rational rational_det(RationalMatrix m);
std::size_t rational_rank(RationalMatrix m);

// Some solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& m, const std::vector<Rational>& rhs);

}  // namespace isoparam::exact

#pragma once

#include <isoparam/errors.hpp>
#include <isoparam/exact/tau_poly.hpp>

#include <map>
#include <sstream>
#include <string>

namespace isoparam::exact {

// c0 + sum_k c_k * x_k with TauPoly coefficients over an ordered symbol set.
// Zero coefficients are never stored.
template <class Symbol>
class AffineForm {
 public:
  using Coeffs = std::map<Symbol, TauPoly>;

  AffineForm() = default;
  AffineForm(TauPoly constant) : constant_(std::move(constant)) {}  // NOLINT
  AffineForm(const Rational& constant) : constant_(constant) {}      // NOLINT
  AffineForm(long constant) : constant_(constant) {}                 // NOLINT

  static AffineForm symbol(const Symbol& s, const TauPoly& coeff = TauPoly(1)) {
    AffineForm f;
    f.add_to(s, coeff);
    return f;
  }

  const TauPoly& constant() const { return constant_; }
  const Coeffs& coeffs() const { return coeffs_; }

  TauPoly coeff(const Symbol& s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? TauPoly() : it->second;
  }

  bool is_pure() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_.is_zero(); }

  AffineForm& operator+=(const AffineForm& rhs) {
    constant_ += rhs.constant_;
    for (const auto& [s, c] : rhs.coeffs_) add_to(s, c);
    return *this;
  }
  AffineForm& operator-=(const AffineForm& rhs) {
    constant_ -= rhs.constant_;
    for (const auto& [s, c] : rhs.coeffs_) add_to(s, -c);
    return *this;
  }
  AffineForm& operator*=(const TauPoly& c) {
    if (c.is_zero()) {
      *this = AffineForm();
      return *this;
    }
    constant_ *= c;
    for (auto& [s, v] : coeffs_) v *= c;
    return *this;
  }

  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(AffineForm a, const TauPoly& c) { return a *= c; }
  friend AffineForm operator*(const TauPoly& c, AffineForm a) { return a *= c; }
  AffineForm operator-() const { return AffineForm() - *this; }

  // Product is only closed when one side carries no symbols.
  friend AffineForm operator*(const AffineForm& a, const AffineForm& b) {
    if (a.is_pure()) return b * a.constant_;
    if (b.is_pure()) return a * b.constant_;
    throw PreconditionError("product of two symbolic affine forms is not affine");
  }

  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void add_to(const Symbol& s, const TauPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  TauPoly constant_;
  Coeffs coeffs_;
};

// Affine form in the constants d_1, d_2, ... (key k >= 1 stands for d_k).
using DLinear = AffineForm<int>;

inline DLinear d_symbol(int k, const TauPoly& coeff = TauPoly(1)) {
  if (k < 1) throw PreconditionError("d-symbol index must be >= 1");
  return DLinear::symbol(k, coeff);
}

// "2*t^3 - 4*t^2*d1 + 2*t*d3"
std::string to_string(const DLinear& f);

}  // namespace isoparam::exact

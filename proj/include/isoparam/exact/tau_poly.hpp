#pragma once

#include <isoparam/exact/rational.hpp>

#include <map>
#include <optional>
#include <string>

namespace isoparam::exact {

// Polynomial in the symbol tau with rational coefficients. Exponents are kept
// in half-units (key 2 means tau^1, key 1 means tau^(1/2)) so that the
// tau^(gamma/2) bookkeeping of monomial factorizations is representable.
// Canonical form: no zero coefficients are ever stored.
class TauPoly {
 public:
  using Terms = std::map<int, Rational>;

  TauPoly() = default;
  TauPoly(const Rational& constant);  // NOLINT: constants embed implicitly
  TauPoly(long constant) : TauPoly(Rational(constant)) {}  // NOLINT

  // c * tau^(half_pow / 2)
  static TauPoly monomial(const Rational& c, int half_pow);
  // c * tau^power, integer power
  static TauPoly tau_power(int power, const Rational& c = 1);
  static TauPoly tau() { return tau_power(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  // True when every stored exponent is a whole power of tau.
  bool has_integer_powers() const;

  // Highest / lowest half-unit exponent; empty for the zero polynomial.
  std::optional<int> max_half_pow() const;
  std::optional<int> min_half_pow() const;

  Rational coeff(int half_pow) const;

  TauPoly& operator+=(const TauPoly& rhs);
  TauPoly& operator-=(const TauPoly& rhs);
  TauPoly& operator*=(const TauPoly& rhs);
  TauPoly& operator*=(const Rational& rhs);

  friend TauPoly operator+(TauPoly a, const TauPoly& b) { return a += b; }
  friend TauPoly operator-(TauPoly a, const TauPoly& b) { return a -= b; }
  friend TauPoly operator*(const TauPoly& a, const TauPoly& b);
  friend TauPoly operator*(TauPoly a, const Rational& c) { return a *= c; }
  friend TauPoly operator*(const Rational& c, TauPoly a) { return a *= c; }
  TauPoly operator-() const;

  friend bool operator==(const TauPoly& a, const TauPoly& b) { return a.terms_ == b.terms_; }

  // Value at tau = sqrt_tau^2. Half-unit exponents stay rational this way.
  // Throws DivisionByZero if a negative exponent meets sqrt_tau == 0.
  Rational evaluate(const Rational& sqrt_tau) const;
  // Floating evaluation at tau. Odd half-unit exponents need tau >= 0.
  double evaluate_at_tau(double tau) const;

  // Human-readable form in the variable t, highest power first: "2*t^3 - 4*t^2".
  std::string str() const;

 private:
  void add_term(int half_pow, const Rational& c);

  Terms terms_;
};

// Exact quotient num / den viewed as polynomials in sqrt(tau). Throws
// VerificationError when den does not divide num, DivisionByZero when den == 0.
TauPoly exact_quotient(const TauPoly& num, const TauPoly& den);

// a^e for e >= 0.
TauPoly pow(const TauPoly& a, unsigned e);

}  // namespace isoparam::exact

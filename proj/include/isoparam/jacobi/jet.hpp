#pragma once

#include <cstddef>
#include <vector>

namespace isoparam::jacobi {

// Truncated Taylor series sum_k c[k] h^k about a base point.
class Jet {
 public:
  static constexpr std::size_t kDefaultOrder = 12;

  Jet() = default;
  explicit Jet(std::vector<double> coeffs) : c_(std::move(coeffs)) {}
  // Constant of the given length.
  static Jet constant(double v, std::size_t length = kDefaultOrder + 1);
  // x0 + h
  static Jet variable(double x0, std::size_t length = kDefaultOrder + 1);

  std::size_t length() const { return c_.size(); }
  double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }
  double& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<double>& coeffs() const { return c_; }

  // k-th derivative at the base point: k! c[k].
  double derivative_at(std::size_t k) const;
  // Jet of the derivative; one term shorter.
  Jet derivative() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  Jet operator-() const { return *this * -1.0; }

 private:
  std::vector<double> c_;
};

// Elementary functions of (x0 + h).
Jet exp_jet(double x0, std::size_t length = Jet::kDefaultOrder + 1);
Jet sinh_jet(double x0, std::size_t length = Jet::kDefaultOrder + 1);
Jet cosh_jet(double x0, std::size_t length = Jet::kDefaultOrder + 1);
Jet sin_jet(double x0, std::size_t length = Jet::kDefaultOrder + 1);
Jet cos_jet(double x0, std::size_t length = Jet::kDefaultOrder + 1);

// s_tau(r0 + h), c_tau(r0 + h) from s' = c, c' = tau s.
Jet s_tau_jet(double tau, double r0, std::size_t length = Jet::kDefaultOrder + 1);
Jet c_tau_jet(double tau, double r0, std::size_t length = Jet::kDefaultOrder + 1);

}  // namespace isoparam::jacobi

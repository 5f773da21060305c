#include <isoparam/errors.hpp>
#include <isoparam/jacobi/jet.hpp>

#include <algorithm>
#include <cmath>

namespace isoparam::jacobi {

Jet Jet::constant(double v, std::size_t length) {
  std::vector<double> c(length, 0.0);
  if (length > 0) c[0] = v;
  return Jet(std::move(c));
}

Jet Jet::variable(double x0, std::size_t length) {
  std::vector<double> c(length, 0.0);
  if (length > 0) c[0] = x0;
  if (length > 1) c[1] = 1.0;
  return Jet(std::move(c));
}

double Jet::derivative_at(std::size_t k) const {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f * (*this)[k];
}

Jet Jet::derivative() const {
  if (c_.size() <= 1) return Jet();
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Jet(std::move(d));
}

// Sums and products truncate to the shorter operand.
Jet& Jet::operator+=(const Jet& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  const std::size_t len = std::min(a.length(), b.length());
  std::vector<double> c(len, 0.0);
  for (std::size_t k = 0; k < len; ++k)
    for (std::size_t i = 0; i <= k; ++i) c[k] += a.c_[i] * b.c_[k - i];
  return Jet(std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
  const std::size_t len = std::min(a.length(), b.length());
  if (len == 0) return Jet();
  if (b.c_[0] == 0.0) throw DivisionByZero("jet division by a series vanishing at the base point");
  std::vector<double> q(len, 0.0);
  for (std::size_t k = 0; k < len; ++k) {
    double v = a.c_[k];
    for (std::size_t i = 1; i <= k; ++i) v -= b.c_[i] * q[k - i];
    q[k] = v / b.c_[0];
  }
  return Jet(std::move(q));
}

namespace {

// Taylor coefficients f^(k)(x0)/k! given a generator of f^(k)(x0).
template <class F>
Jet from_derivatives(std::size_t length, F deriv) {
  std::vector<double> c(length);
  double fact = 1.0;
  for (std::size_t k = 0; k < length; ++k) {
    if (k > 1) fact *= static_cast<double>(k);
    c[k] = deriv(k) / fact;
  }
  return Jet(std::move(c));
}

}  // namespace

Jet exp_jet(double x0, std::size_t length) {
  const double e = std::exp(x0);
  return from_derivatives(length, [&](std::size_t) { return e; });
}

Jet sinh_jet(double x0, std::size_t length) {
  const double s = std::sinh(x0), c = std::cosh(x0);
  return from_derivatives(length, [&](std::size_t k) { return k % 2 == 0 ? s : c; });
}

Jet cosh_jet(double x0, std::size_t length) {
  const double s = std::sinh(x0), c = std::cosh(x0);
  return from_derivatives(length, [&](std::size_t k) { return k % 2 == 0 ? c : s; });
}

Jet sin_jet(double x0, std::size_t length) {
  const double vals[4] = {std::sin(x0), std::cos(x0), -std::sin(x0), -std::cos(x0)};
  return from_derivatives(length, [&](std::size_t k) { return vals[k % 4]; });
}

Jet cos_jet(double x0, std::size_t length) {
  const double vals[4] = {std::cos(x0), -std::sin(x0), -std::cos(x0), std::sin(x0)};
  return from_derivatives(length, [&](std::size_t k) { return vals[k % 4]; });
}

}  // namespace isoparam::jacobi

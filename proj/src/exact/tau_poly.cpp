#include <isoparam/errors.hpp>
#include <isoparam/exact/tau_poly.hpp>

#include <cmath>
#include <vector>

namespace isoparam::exact {

TauPoly::TauPoly(const Rational& constant) { add_term(0, constant); }

TauPoly TauPoly::monomial(const Rational& c, int half_pow) {
  TauPoly p;
  p.add_term(half_pow, c);
  return p;
}

TauPoly TauPoly::tau_power(int power, const Rational& c) { return monomial(c, 2 * power); }

bool TauPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

bool TauPoly::has_integer_powers() const {
  for (const auto& [h, c] : terms_)
    if (h % 2 != 0) return false;
  return true;
}

std::optional<int> TauPoly::max_half_pow() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<int> TauPoly::min_half_pow() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rational TauPoly::coeff(int half_pow) const {
  auto it = terms_.find(half_pow);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TauPoly::add_term(int half_pow, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(half_pow, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TauPoly& TauPoly::operator+=(const TauPoly& rhs) {
  for (const auto& [h, c] : rhs.terms_) add_term(h, c);
  return *this;
}

TauPoly& TauPoly::operator-=(const TauPoly& rhs) {
  for (const auto& [h, c] : rhs.terms_) add_term(h, -c);
  return *this;
}

TauPoly operator*(const TauPoly& a, const TauPoly& b) {
  TauPoly out;
  for (const auto& [ha, ca] : a.terms_)
    for (const auto& [hb, cb] : b.terms_) out.add_term(ha + hb, Rational(ca * cb));
  return out;
}

TauPoly& TauPoly::operator*=(const TauPoly& rhs) { return *this = *this * rhs; }

TauPoly& TauPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [h, c] : terms_) c *= rhs;
  return *this;
}

TauPoly TauPoly::operator-() const {
  TauPoly out = *this;
  for (auto& [h, c] : out.terms_) c = -c;
  return out;
}

Rational TauPoly::evaluate(const Rational& sqrt_tau) const {
  Rational sum = 0;
  for (const auto& [h, c] : terms_) {
    if (h < 0) {
      if (sqrt_tau == 0) throw DivisionByZero("negative tau power evaluated at tau = 0");
      sum += c / pow(sqrt_tau, static_cast<unsigned>(-h));
    } else {
      sum += c * pow(sqrt_tau, static_cast<unsigned>(h));
    }
  }
  return sum;
}

double TauPoly::evaluate_at_tau(double tau) const {
  double sum = 0.0;
  for (const auto& [h, c] : terms_) {
    double power;
    if (h % 2 == 0) {
      power = std::pow(tau, h / 2);
    } else {
      if (tau < 0) throw DivisionByZero("half-integer tau power at negative tau");
      power = std::pow(std::sqrt(tau), h);
    }
    sum += c.get_d() * power;
  }
  return sum;
}

namespace {

std::string variable_part(int h) {
  if (h == 0) return {};
  if (h == 2) return "t";
  if (h % 2 == 0) return "t^" + std::to_string(h / 2);
  return "t^(" + std::to_string(h) + "/2)";
}

}  // namespace

std::string TauPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [h, c] = *it;
    std::string var = variable_part(h);
    Rational mag = abs(c);
    std::string body;
    if (var.empty())
      body = to_string(mag);
    else if (mag == 1)
      body = var;
    else
      body = to_string(mag) + "*" + var;
    if (first)
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

TauPoly exact_quotient(const TauPoly& num, const TauPoly& den) {
  if (den.is_zero()) throw DivisionByZero("exact_quotient by zero polynomial");
  if (num.is_zero()) return {};
  if (den.is_monomial()) {
    const auto& [hd, cd] = *den.terms().begin();
    TauPoly out;
    for (const auto& [h, c] : num.terms()) out += TauPoly::monomial(Rational(c / cd), h - hd);
    return out;
  }

  // Long division in u = sqrt(tau), after shifting both to nonnegative exponents.
  const int shift_num = *num.min_half_pow();
  const int shift_den = *den.min_half_pow();
  std::vector<Rational> r(*num.max_half_pow() - shift_num + 1);
  for (const auto& [h, c] : num.terms()) r[h - shift_num] = c;
  std::vector<Rational> d(*den.max_half_pow() - shift_den + 1);
  for (const auto& [h, c] : den.terms()) d[h - shift_den] = c;

  const int deg_d = static_cast<int>(d.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < deg_d) throw VerificationError("exact_quotient: divisor does not divide");
  std::vector<Rational> q(r.size() - deg_d);
  for (int i = static_cast<int>(r.size()) - 1; i >= deg_d; --i) {
    if (r[i] == 0) continue;
    Rational factor = r[i] / d[deg_d];
    q[i - deg_d] = factor;
    for (int j = 0; j <= deg_d; ++j) r[i - deg_d + j] -= factor * d[j];
  }
  for (const auto& rem : r)
    if (rem != 0) throw VerificationError("exact_quotient: divisor does not divide");

  TauPoly out;
  for (std::size_t i = 0; i < q.size(); ++i)
    out += TauPoly::monomial(q[i], static_cast<int>(i) + shift_num - shift_den);
  return out;
}

TauPoly pow(const TauPoly& a, unsigned e) {
  TauPoly result(1);
  TauPoly base = a;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace isoparam::exact

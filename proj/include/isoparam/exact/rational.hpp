#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace isoparam::exact {

// Arbitrary-precision rational in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonicalized num/den. Throws DivisionByZero when den == 0.
Rational make_rational(long num, long den = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", optional sign. Throws PreconditionError on bad input.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

Integer factorial(unsigned k);

}  // namespace isoparam::exact

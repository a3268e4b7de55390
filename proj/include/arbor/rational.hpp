#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arbor {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q", "-p/q" and the Unicode minus sign. Throws ParseError.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace arbor

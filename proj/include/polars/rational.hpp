#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polars {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// num * 2^-exp2.
Rational dyadic(const Integer& num, unsigned long exp2);

/// Parses "p/q", "-p/q" or an integer literal.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

double to_double(const Rational& r);

/// Decimal rendering with the given number of significant digits (display only).
std::string to_decimal(const Rational& r, int digits = 12);

int sign(const Rational& r);
int sign(const Integer& z);

}  // namespace polars

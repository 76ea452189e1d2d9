#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace seedcast {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "0.1", "3", "-2.5e-3" or "19/1019" into an exact rational.
Rational parse_rational(const std::string& text);

double to_double(const Rational& v);

// "num/den" in lowest terms (denominator printed even when 1).
std::string format_rational(const Rational& v);

// Decimal string with 17 significant digits, locale independent.
std::string format_float(double v);

Rational rational_pow(const Rational& base, unsigned exp);
BigInt bigint_pow(const BigInt& base, unsigned exp);

}  // namespace seedcast

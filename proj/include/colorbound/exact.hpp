#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace colorbound {

using BigInt = boost::multiprecision::cpp_int;
/// Always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

BigInt power(const BigInt &base, unsigned exponent);
Rational power(const Rational &base, unsigned exponent);

inline BigInt numerator_of(const Rational &r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational &r) { return boost::multiprecision::denominator(r); }

/// "p/q", always with an explicit denominator (integers render as "n/1").
std::string to_fraction_string(const Rational &r);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal_string(const Rational &r, int digits);

/// Parses "p/q" or "n"; throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(const std::string &text);

}  // namespace colorbound

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gqkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_bigint(const std::string& text);

BigInt bigint_pow(const BigInt& base, unsigned exponent);
BigInt bigint_gcd(const BigInt& a, const BigInt& b);
/// Floor square root of a nonnegative integer.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

}  // namespace gqkit

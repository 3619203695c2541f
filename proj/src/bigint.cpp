#include "gqkit/bigint.hpp"

#include <cctype>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace gqkit {

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::invalid_argument("not an integer: '" + text + "'");
    v = v * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-v) : v;
}

BigInt bigint_pow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

BigInt bigint_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("square root of a negative integer");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  const BigInt r = isqrt(n);
  return r * r == n;
}

}  // namespace gqkit

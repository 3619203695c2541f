#include "gqkit/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gqkit {

std::string to_string(FeasibilityCondition c) {
  switch (c) {
    case FeasibilityCondition::point_count: return "point-count";
    case FeasibilityCondition::divisibility: return "divisibility";
    case FeasibilityCondition::higman: return "higman";
    case FeasibilityCondition::refined_higman: return "refined-higman";
  }
  return "unknown";
}

FeasibilityVerdict gq_feasible(const BigInt& s, const BigInt& t, const std::optional<BigInt>& n_points) {
  if (s < 2 || t < 2) throw std::invalid_argument("feasibility needs s, t >= 2");
  FeasibilityVerdict v;
  v.s = s;
  v.t = t;
  if (n_points && (s + 1) * (s * t + 1) != *n_points) v.failed_conditions.push_back(FeasibilityCondition::point_count);
  if ((s * t * (s + 1) * (t + 1)) % (s + t) != 0) v.failed_conditions.push_back(FeasibilityCondition::divisibility);
  if (t > s * s || s > t * t) v.failed_conditions.push_back(FeasibilityCondition::higman);
  if ((s < t * t && s > t * t - t) || (t < s * s && t > s * s - s))
    v.failed_conditions.push_back(FeasibilityCondition::refined_higman);
  v.pass = v.failed_conditions.empty();
  return v;
}

std::vector<std::pair<long long, long long>> enumerate_feasible(long long s_max, long long t_max) {
  if (s_max > 10'000 || t_max > 10'000) throw std::invalid_argument("enumeration bounds are capped at 10000");
  std::vector<std::pair<long long, long long>> out;
  for (long long s = 2; s <= s_max; ++s) {
    // t <= s^2 bounds the inner loop.
    const long long hi = std::min(t_max, s * s);
    for (long long t = s; t <= hi; ++t)
      if (gq_feasible(s, t).pass) out.emplace_back(s, t);
  }
  return out;
}

std::optional<BigInt> solve_point_count(const BigInt& t, const BigInt& n) {
  if (t < 1 || n < 1) throw std::invalid_argument("solve_point_count needs t, n >= 1");
  const BigInt disc = (t + 1) * (t + 1) + 4 * t * (n - 1);
  if (!is_perfect_square(disc)) return std::nullopt;
  const BigInt num = isqrt(disc) - (t + 1);
  if (num <= 0 || num % (2 * t) != 0) return std::nullopt;
  const BigInt s = num / (2 * t);
  if ((s + 1) * (s * t + 1) != n) return std::nullopt;
  return s;
}

std::optional<BigInt> solve_block_count(const BigInt& t, const BigInt& n) {
  if (t < 1 || n < 1) throw std::invalid_argument("solve_block_count needs t, n >= 1");
  if ((n - 1) % t != 0) return std::nullopt;
  const BigInt s = (n - 1) / t;
  if (s < 1) return std::nullopt;
  return s;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::from_ints(std::vector<long long> coeffs) {
  std::vector<Rational> c;
  for (long long x : coeffs) c.emplace_back(x);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::evaluate(const Rational& x) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) out << mag.str();
    if (k >= 1) out << var;
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

Polynomial parse_polynomial(const std::string& text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}' && ch != '*') s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  Polynomial result;
  std::size_t i = 0;
  auto read_int = [&](BigInt& out) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    out = parse_bigint(s.substr(start, i - start));
    return true;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw std::invalid_argument("expected '+' or '-' in '" + text + "'");
    }
    Rational c = 1;
    BigInt num;
    const bool has_coeff = read_int(num);
    if (has_coeff) {
      c = Rational(num);
      if (i < s.size() && s[i] == '/') {
        ++i;
        BigInt den;
        if (!read_int(den) || den == 0) throw std::invalid_argument("bad denominator in '" + text + "'");
        c = Rational(num, den);
      }
    }
    int k = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        BigInt e;
        if (!read_int(e)) throw std::invalid_argument("bad exponent in '" + text + "'");
        k = static_cast<int>(e);
      }
    } else if (!has_coeff) {
      throw std::invalid_argument("empty term in '" + text + "'");
    }
    result = result + Polynomial::monomial(c * sign, k);
  }
  return result;
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  Polynomial r = f;
  std::vector<Rational> q(std::max(0, f.degree() - g.degree() + 1));
  while (!r.is_zero() && r.degree() >= g.degree()) {
    const int k = r.degree() - g.degree();
    const Rational c = r.leading() / g.leading();
    q[k] = c;
    r = r - Polynomial::monomial(c, k) * g;
  }
  return {Polynomial(std::move(q)), r};
}

bool IdentitySuiteReport::all_remainders_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.remainder_ok; });
}

IdentitySuiteReport verify_identity_suite() {
  struct Entry {
    const char* label;
    Polynomial dividend;
    const char* divisor;
    const char* printed_quotient;
    const char* printed_remainder;
  };
  const auto P = [](const char* s) { return parse_polynomial(s); };
  const std::vector<Entry> entries = {
      {"16q^2(q^2 - 1) by 2q - 1", P("16q^2") * P("q^2 - 1"), "2q - 1", "8q^3 + 4q^2 - 6q - 3",
       "-3"},
      {"q^6 + q^5 - q^4 - q^3 by q^2 + q - 1", P("q^6 + q^5 - q^4 - q^3"), "q^2 + q - 1", "q^4 - q + 1", "1 - 2q"},
      {"q^5(q^2 + 1)(q^3 - 1) by q^3 + q^2 - 1", P("q^5") * P("q^2 + 1") * P("q^3 - 1"), "q^3 + q^2 - 1",
       "q^7 - q^6 + 2q^5 - 2q^4 + q^3 - 2q + 3", "-3q^2 - 2q + 3"},
      {"q^5(q^2 - 1)(q^3 + 1) by q^3 + q^2 - 1", P("q^5") * P("q^2 - 1") * P("q^3 + 1"), "q^3 + q^2 - 1",
       "q^7 - q^6 + 2q^4 - 3q^3 + 2q^2 - 3", "5q^2 - 3"},
      {"q^7(q^4 - 1)(q^3 + 1) by q^4 + q^3 - 1", P("q^7") * P("q^4 - 1") * P("q^3 + 1"), "q^4 + q^3 - 1",
       "q^10 - q^8 + q^8 - q^5 + 2q^4 - 3q^3 + 3q^2 - 4q + 6", "-9q^3 + 3q^2 - 4q + 6"},
      {"q^8(q^5 - 1)(q^3 + 1) by q^5 + q^3 - 1", P("q^8") * P("q^5 - 1") * P("q^3 + 1"), "q^5 + q^3 - 1",
       "q^11 - q^9 + q^8 + q^7 - q^6 - q^5 + q^3 + q^2 - 2q - 2", "2q^4 + 3q^3 + q^2 - 2q - 2"},
  };
  IdentitySuiteReport report;
  for (const auto& e : entries) {
    IdentityCheck c;
    c.label = e.label;
    c.dividend = e.dividend;
    c.divisor = P(e.divisor);
    std::tie(c.quotient, c.remainder) = poly_divrem(c.dividend, c.divisor);
    c.printed_remainder = P(e.printed_remainder);
    c.printed_quotient = P(e.printed_quotient);
    c.remainder_ok = c.remainder == c.printed_remainder;
    c.quotient_ok = c.quotient == *c.printed_quotient;
    if (!c.remainder_ok) {
      c.diagnostic = "remainder " + c.remainder.to_string() + " differs from printed " + c.printed_remainder.to_string();
    } else if (!*c.quotient_ok) {
      c.diagnostic = "printed quotient " + std::string(e.printed_quotient) + " differs from recomputed " +
                     c.quotient.to_string() + "; remainder confirmed";
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

TwoTransitiveDegreeReport two_transitive_degree_ok(long long n, long long k) {
  if (k < 1 || n <= k) throw std::invalid_argument("degree check needs n > k >= 1");
  TwoTransitiveDegreeReport r;
  // log2(n) <= k/2 iff n^2 <= 2^k.
  r.affine_ok = BigInt(n) * n <= bigint_pow(2, static_cast<unsigned>(k));
  r.exception = n == 28 && k == 9;
  r.almost_simple_ok = n < 2 * k || r.exception;
  r.ok = r.affine_ok || r.almost_simple_ok;
  if (r.affine_ok) r.branch = "affine";
  else if (r.exception) r.branch = "exception";
  else if (r.almost_simple_ok) r.branch = "almost-simple";
  else r.branch = "none";
  return r;
}

}  // namespace gqkit

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gqkit/bigint.hpp"

namespace gqkit {

enum class FeasibilityCondition { point_count, divisibility, higman, refined_higman };
std::string to_string(FeasibilityCondition c);

struct FeasibilityVerdict {
  BigInt s;
  BigInt t;
  bool pass = false;
  std::vector<FeasibilityCondition> failed_conditions;
};

/// Standard necessary conditions on the order (s, t) of a thick GQ:
///   divisibility    s + t | st(s+1)(t+1)
///   higman          t <= s^2 and s <= t^2
///   refined_higman  s < t^2 implies s <= t^2 - t, and symmetrically
/// With n_points given, also (s+1)(st+1) = n_points. Throws std::invalid_argument for s or t below 2.
FeasibilityVerdict gq_feasible(const BigInt& s, const BigInt& t, const std::optional<BigInt>& n_points = std::nullopt);

/// Pairs 2 <= s <= t with s <= s_max and t <= t_max that pass gq_feasible, ordered by (s, t).
std::vector<std::pair<long long, long long>> enumerate_feasible(long long s_max, long long t_max);

/// Positive integer s with (s+1)(st+1) = n, decided through the discriminant (t+1)^2 + 4t(n-1).
std::optional<BigInt> solve_point_count(const BigInt& t, const BigInt& n);
/// Positive integer s with st + 1 = n.
std::optional<BigInt> solve_block_count(const BigInt& t, const BigInt& n);

/// Polynomial in q with exact rational coefficients, constant term first.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial from_ints(std::vector<long long> coeffs);
  static Polynomial constant(const Rational& c);
  /// c q^k.
  static Polynomial monomial(const Rational& c, int k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational leading() const;
  Rational evaluate(const Rational& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Descending form such as "8q^3 + 4q^2 - 6q - 3".
  std::string to_string(char var = 'q') const;

private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Parses sums of terms c*q^k written as in Polynomial::to_string; throws std::invalid_argument.
Polynomial parse_polynomial(const std::string& text, char var = 'q');

/// f = g * quotient + remainder with deg(remainder) < deg(g). Throws std::invalid_argument for g = 0.
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& f, const Polynomial& g);

struct IdentityCheck {
  std::string label;
  Polynomial dividend;
  Polynomial divisor;
  Polynomial quotient;
  Polynomial remainder;
  Polynomial printed_remainder;
  std::optional<Polynomial> printed_quotient;
  bool remainder_ok = false;
  /// Unset when no quotient is printed.
  std::optional<bool> quotient_ok;
  std::string diagnostic;
};

struct IdentitySuiteReport {
  std::vector<IdentityCheck> checks;
  bool all_remainders_ok() const;
};

IdentitySuiteReport verify_identity_suite();

struct TwoTransitiveDegreeReport {
  bool ok = false;
  bool affine_ok = false;
  bool almost_simple_ok = false;
  bool exception = false;
  /// "affine", "almost-simple", "exception" or "none".
  std::string branch;
};

/// Whether a 2-transitive action of degree n can come from a subgroup of Sym(k):
/// affine needs log2(n) <= k/2, almost simple needs n < 2k except n = 28, k = 9.
/// Throws std::invalid_argument unless n > k >= 1.
TwoTransitiveDegreeReport two_transitive_degree_ok(long long n, long long k);

}  // namespace gqkit

#include "doctest.h"

#include <random>
#include <set>

#include "gqkit/arith.hpp"

using namespace gqkit;

namespace {

// Direct evaluation of the four order conditions with 128-bit integers.
bool oracle_feasible(long long s, long long t) {
  const __int128 S = s, T = t;
  if ((S * T * (S + 1) * (T + 1)) % (S + T) != 0) return false;
  if (T > S * S || S > T * T) return false;
  if (S < T * T && S > T * T - T) return false;
  if (T < S * S && T > S * S - S) return false;
  return true;
}

std::optional<long long> oracle_root(long long t, long long n) {
  for (long long s = 1; s <= 100'000; ++s) {
    const __int128 v = static_cast<__int128>(s + 1) * (s * t + 1);
    if (v == n) return s;
    if (v > n) break;
  }
  return std::nullopt;
}

Polynomial random_poly(std::mt19937& rng, int max_degree) {
  const int d = static_cast<int>(rng() % (max_degree + 1));
  std::vector<Rational> c(d + 1);
  for (auto& x : c) x = Rational(static_cast<long long>(rng() % 41) - 20, 1 + static_cast<long long>(rng() % 4));
  return Polynomial(c);
}

}  // namespace

TEST_CASE("feasibility examples") {
  CHECK(gq_feasible(2, 2).pass);
  CHECK(gq_feasible(3, 5).pass);
  const auto v = gq_feasible(2, 5);
  CHECK_FALSE(v.pass);
  CHECK(std::find(v.failed_conditions.begin(), v.failed_conditions.end(), FeasibilityCondition::higman) !=
        v.failed_conditions.end());
  CHECK_FALSE(gq_feasible(2, 3).pass);
  CHECK(gq_feasible(3, 5, BigInt(64)).pass);
  CHECK_FALSE(gq_feasible(3, 5, BigInt(65)).pass);
  CHECK_THROWS(gq_feasible(1, 5));
}

TEST_CASE("enumerate_feasible agrees with a brute-force oracle") {
  for (auto [sm, tm] : {std::pair{4LL, 4LL}, {2LL, 2LL}, {5LL, 5LL}, {20LL, 20LL}, {30LL, 200LL}}) {
    std::vector<std::pair<long long, long long>> expected;
    for (long long s = 2; s <= sm; ++s)
      for (long long t = s; t <= tm; ++t)
        if (oracle_feasible(s, t)) expected.emplace_back(s, t);
    CHECK(enumerate_feasible(sm, tm) == expected);
  }
  const auto four = enumerate_feasible(4, 4);
  CHECK(four == std::vector<std::pair<long long, long long>>{{2, 2}, {2, 4}, {3, 3}, {4, 4}});
  CHECK(enumerate_feasible(2, 2).size() == 1);
}

TEST_CASE("same prime power parameters are never feasible unless equal") {
  for (long long p : {2, 3, 5, 7, 11, 13}) {
    for (long long a = p; a <= 10'000; a *= p) {
      for (long long b = p; b <= 10'000; b *= p) {
        if (a == b || a - 1 < 2 || b - 1 < 2) continue;
        CHECK_FALSE(gq_feasible(a - 1, b - 1).pass);
      }
    }
  }
}

TEST_CASE("integer roots of (s+1)(st+1) = N") {
  CHECK_FALSE(solve_point_count(6, 33712).has_value());
  CHECK_FALSE(solve_point_count(14, 2295).has_value());
  CHECK(solve_point_count(5, 64) == BigInt(3));
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const long long t = 1 + rng() % 60;
    long long n;
    if (i % 2) {
      const long long s = 1 + rng() % 3000;
      n = (s + 1) * (s * t + 1) + static_cast<long long>(rng() % 3) - 1;
    } else {
      n = 1 + static_cast<long long>(rng() % 5'000'000);
    }
    if (n < 1) continue;
    const auto got = solve_point_count(t, n);
    const auto want = oracle_root(t, n);
    REQUIRE(got.has_value() == want.has_value());
    if (got) CHECK(*got == *want);
  }
  CHECK(solve_block_count(5, 16) == BigInt(3));
  CHECK_FALSE(solve_block_count(5, 17).has_value());
}

TEST_CASE("orders of the N-orbit table") {
  const std::vector<std::pair<long long, long long>> rows{{5, 5}, {7, 7}, {11, 11}, {7, 14}};
  const std::vector<long long> n{26, 50, 122, 99};
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].first * rows[i].second + 1 == n[i]);
}

TEST_CASE("polynomial parsing and printing") {
  const auto p = parse_polynomial("8q^3 + 4q^2 - 6q - 3");
  CHECK(p == Polynomial::from_ints({-3, -6, 4, 8}));
  CHECK(p.to_string() == "8q^3 + 4q^2 - 6q - 3");
  CHECK(parse_polynomial("1 - 2q").to_string() == "-2q + 1");
  CHECK(parse_polynomial("q^{10} - q^8 + q^8") == Polynomial::monomial(1, 10));
  CHECK(parse_polynomial("3/2q").coeff(1) == Rational(3, 2));
  CHECK_THROWS(parse_polynomial("q^"));
  CHECK_THROWS(parse_polynomial(""));
}

TEST_CASE("division examples") {
  const auto [q1, r1] = poly_divrem(parse_polynomial("16q^4 - 16q^2"), parse_polynomial("2q - 1"));
  CHECK(q1 == parse_polynomial("8q^3 + 4q^2 - 6q - 3"));
  CHECK(r1 == Polynomial::constant(-3));
  const auto f = parse_polynomial("q^5 - 7q + 2");
  const auto [q2, r2] = poly_divrem(f, f);
  CHECK(q2 == Polynomial::constant(1));
  CHECK(r2.is_zero());
  CHECK_THROWS(poly_divrem(f, Polynomial()));
}

TEST_CASE("division reconstructs the dividend") {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto f = random_poly(rng, 12);
    auto g = random_poly(rng, 12);
    if (g.is_zero()) g = Polynomial::constant(1);
    const auto [q, r] = poly_divrem(f, g);
    REQUIRE(g * q + r == f);
    REQUIRE(r.degree() < g.degree());
  }
}

TEST_CASE("identity suite") {
  const auto rep = verify_identity_suite();
  REQUIRE(rep.checks.size() == 6);
  CHECK(rep.all_remainders_ok());
  const std::vector<std::string> remainders{"-3", "-2q + 1", "-3q^2 - 2q + 3", "5q^2 - 3", "-9q^3 + 3q^2 - 4q + 6",
                                            "2q^4 + 3q^3 + q^2 - 2q - 2"};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(rep.checks[i].remainder.to_string() == remainders[i]);
    CHECK(rep.checks[i].quotient_ok == (i != 4));
  }
  CHECK(rep.checks[4].quotient.to_string() == "q^10 - q^9 + q^8 - q^5 + 2q^4 - 3q^3 + 3q^2 - 4q + 6");
  CHECK_FALSE(rep.checks[4].diagnostic.empty());
}

TEST_CASE("two-transitive degree constraint") {
  CHECK(two_transitive_degree_ok(28, 9).ok);
  CHECK(two_transitive_degree_ok(28, 9).branch == "exception");
  CHECK_FALSE(two_transitive_degree_ok(32, 8).ok);
  CHECK(two_transitive_degree_ok(16, 8).affine_ok);
  CHECK(two_transitive_degree_ok(7, 5).almost_simple_ok);
  CHECK_THROWS(two_transitive_degree_ok(4, 4));
}

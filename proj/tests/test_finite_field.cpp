#include "doctest.h"

#include <algorithm>
#include <vector>

#include "gqkit/finite_field.hpp"

using namespace gqkit;

namespace {

// Schoolbook polynomial arithmetic mod (p, modulus), independent of the tables.
std::vector<int> naive_mul(const std::vector<int>& a, const std::vector<int>& b, int p, const std::vector<int>& m) {
  const int f = static_cast<int>(m.size()) - 1;
  std::vector<int> prod(2 * f, 0);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * f - 1; d >= f; --d) {
    const int c = prod[d];
    if (!c) continue;
    for (int k = 0; k <= f; ++k) prod[d - f + k] = ((prod[d - f + k] - c * m[k]) % p + p) % p;
  }
  prod.resize(f);
  return prod;
}

}  // namespace

TEST_CASE("prime power decomposition") {
  CHECK(prime_power_decompose(1) == std::pair<int, int>{0, 0});
  CHECK(prime_power_decompose(2) == std::pair<int, int>{2, 1});
  CHECK(prime_power_decompose(64) == std::pair<int, int>{2, 6});
  CHECK(prime_power_decompose(243) == std::pair<int, int>{3, 5});
  CHECK(prime_power_decompose(12) == std::pair<int, int>{0, 0});
  CHECK(is_prime_power(361));
  CHECK_FALSE(is_prime_power(100));
}

TEST_CASE("every shipped field matches schoolbook arithmetic") {
  for (int q = 2; q <= kMaxFieldOrder; ++q) {
    if (!is_prime_power(q)) continue;
    CAPTURE(q);
    const Field F = make_standard_field(q);
    const auto& m = F.spec().modulus;
    const auto elems = F.elements();
    REQUIRE(static_cast<int>(elems.size()) == q);
    // Sampled pairs keep runtime small for the larger fields.
    const int stride = q > 64 ? 7 : 1;
    for (int i = 0; i < q; i += stride) {
      for (int j = 0; j < q; j += stride) {
        const auto a = elems[i], b = elems[j];
        const auto ca = F.coeffs(a), cb = F.coeffs(b);
        std::vector<int> sum(ca.size());
        for (std::size_t k = 0; k < ca.size(); ++k) sum[k] = (ca[k] + cb[k]) % F.p();
        REQUIRE(F.coeffs(F.add(a, b)) == sum);
        REQUIRE(F.coeffs(F.mul(a, b)) == naive_mul(ca, cb, F.p(), m));
      }
    }
    for (auto a : elems) {
      if (F.is_zero(a)) continue;
      REQUIRE(F.mul(a, F.inv(a)) == F.one());
      REQUIRE(F.pow(a, q - 1) == F.one());
      REQUIRE(F.frobenius(a, F.f()) == a);
    }
  }
}

TEST_CASE("multiplicative group is cyclic") {
  for (int q : {4, 8, 9, 16, 25, 27, 49, 64, 81, 125, 256, 343}) {
    const Field F = make_standard_field(q);
    int best = 0;
    for (auto a : F.elements()) {
      if (F.is_zero(a)) continue;
      int ord = 1;
      for (auto x = a; x != F.one(); x = F.mul(x, a)) ++ord;
      best = std::max(best, ord);
    }
    CHECK(best == q - 1);
  }
}

TEST_CASE("codes compare coefficient vectors lexicographically") {
  const Field F = make_standard_field(9);
  const auto e = F.elements();
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(F.coeffs(e[i - 1]) < F.coeffs(e[i]));
}

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(ff_make({4, 1, {0, 1}}), field_error);
  CHECK_THROWS_AS(ff_make({2, 2, {1, 0, 2}}), field_error);
  try {
    (void)ff_make({2, 2, {1, 0, 1}});
    FAIL("x^2+1 over GF(2) is reducible");
  } catch (const reducible_modulus_error& e) {
    CHECK(e.factor() == std::vector<int>{1, 1});
  }
  CHECK_THROWS_AS(make_standard_field(1024), field_error);
  CHECK_THROWS_AS(make_standard_field(6), field_error);
  const Field F = make_standard_field(7);
  CHECK_THROWS_AS((void)F.inv(F.zero()), field_error);
}

#include "doctest.h"

#include <map>
#include <numeric>
#include <random>

#include "gqkit/geometry.hpp"
#include "gqkit/lietype.hpp"
#include "gqkit/permgroup.hpp"

using namespace gqkit;

namespace {

// |SL(2,p)| by counting determinant-one matrices mod p.
long long count_sl2(long long p) {
  long long c = 0;
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b < p; ++b)
      for (long long d = 0; d < p; ++d)
        for (long long e = 0; e < p; ++e)
          if (((a * e - b * d) % p + p) % p == 1) ++c;
  return c;
}

// Number of 4x4 matrices over GF(2) preserving x1 y2 + x2 y1 + x3 y4 + x4 y3.
long long count_sp4_2() {
  static const int J[4] = {1, 0, 3, 2};
  long long c = 0;
  for (int m = 0; m < (1 << 16); ++m) {
    int rows[4];
    for (int i = 0; i < 4; ++i) rows[i] = (m >> (4 * i)) & 15;
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = 0; j < 4 && ok; ++j) {
        int b = 0;
        for (int k = 0; k < 4; ++k) b ^= ((rows[i] >> k) & 1) & ((rows[j] >> J[k]) & 1);
        ok = b == (J[i] == j ? 1 : 0);
      }
    if (ok) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("orders against counting and group actions") {
  for (long long p : {5, 7, 11, 13}) {
    CHECK(lie_order(psl(2, p)) == count_sl2(p) / 2);
  }
  CHECK(lie_order(psp(4, 4)) == 979200);
  // Sp(4,2) is not simple, so compare with the generic symplectic formula q^4 (q^2-1)(q^4-1).
  CHECK(count_sp4_2() == 16 * 3 * 15);
  CHECK(lie_order(psl(2, 64)) == 262080);

  // The transvection groups act faithfully on the points of the quadrangle.
  CHECK(classical_group_action(build_classical_gq_model(GqFamily::W3, 3)).order() == lie_order(psp(4, 3)));
  CHECK(classical_group_action(build_classical_gq_model(GqFamily::W3, 4)).order() == lie_order(psp(4, 4)));
  CHECK(classical_group_action(build_classical_gq_model(GqFamily::H3, 2)).order() == lie_order(psu(4, 2)));
  CHECK(classical_group_action(build_classical_gq_model(GqFamily::H3, 3)).order() == lie_order(psu(4, 3)));
  CHECK(classical_group_action(build_classical_gq_model(GqFamily::H4, 2)).order() == lie_order(psu(5, 2)));
}

TEST_CASE("orders of small exceptional and orthogonal groups") {
  CHECK(lie_order(exceptional(LieFamily::Sz, 8)) == 29120);
  CHECK(lie_order(exceptional(LieFamily::Sz, 32)) == 32537600);
  CHECK(lie_order(exceptional(LieFamily::G2, 3)) == 4245696);
  CHECK(lie_order(exceptional(LieFamily::Ree2G2, 27)) == 10073444472LL);
  CHECK(lie_order(exceptional(LieFamily::D4_3, 2)) == 211341312);
  CHECK(lie_order(exceptional(LieFamily::TwistedF4p, 2)) == 17971200);
  CHECK(lie_order(psu(3, 3)) == 6048);
  CHECK(lie_order(pomega(1, 8, 2)) == 174182400);
  CHECK(lie_order(pomega(-1, 8, 2)) == 197406720);
  CHECK(lie_order(pomega(0, 7, 3)) == BigInt("4585351680"));
  // Exceptional isomorphisms.
  CHECK(lie_order(psl(2, 4)) == lie_order(psl(2, 5)));
  CHECK(lie_order(psl(3, 2)) == lie_order(psl(2, 7)));
  CHECK(lie_order(psl(4, 2)) == 20160);
  CHECK(lie_order(psp(6, 2)) == 1451520);
}

TEST_CASE("outer automorphism orders") {
  CHECK(out_order(psl(2, 729)) == 12);
  CHECK(out_order(psl(2, 64)) == 6);
  CHECK(out_order(psl(2, 7)) == 2);
  CHECK(out_order(psl(3, 4)) == 12);
  CHECK(out_order(psl(4, 9)) == 16);
  CHECK(out_order(psu(3, 8)) == 18);
  CHECK(out_order(psu(5, 4)) == 20);
  CHECK(out_order(psp(4, 4)) == 4);
  CHECK(out_order(pomega(1, 8, 2)) == 6);
  CHECK(out_order(pomega(1, 8, 3)) == 24);
  CHECK(out_order(pomega(-1, 8, 2)) == 2);
  CHECK(out_order(exceptional(LieFamily::Sz, 32)) == 5);
  CHECK(out_order(exceptional(LieFamily::G2, 3)) == 2);
  CHECK(out_order(exceptional(LieFamily::D4_3, 2)) == 3);
}

TEST_CASE("validity and naming") {
  CHECK_FALSE(is_valid(psl(2, 2)));
  CHECK_FALSE(is_valid(psl(2, 3)));
  CHECK_FALSE(is_valid(psl(2, 6)));
  CHECK_FALSE(is_valid(psu(3, 2)));
  CHECK_FALSE(is_valid(psp(4, 2)));
  CHECK_FALSE(is_valid(exceptional(LieFamily::Sz, 2)));
  CHECK_FALSE(is_valid(exceptional(LieFamily::Sz, 16)));
  CHECK_FALSE(is_valid(exceptional(LieFamily::G2, 2)));
  CHECK(is_valid(psl(3, 2)));
  for (const auto& id : {psl(2, 64), psu(5, 4), psp(6, 3), pomega(1, 8, 2), pomega(-1, 8, 2), pomega(0, 7, 3),
                         exceptional(LieFamily::Sz, 8), exceptional(LieFamily::Ree2G2, 27),
                         exceptional(LieFamily::TwistedF4p, 2), exceptional(LieFamily::D4_3, 2)}) {
    const auto back = parse_lie_id(to_string(id));
    REQUIRE(back);
    CHECK(*back == id);
  }
  CHECK(to_string(pomega(1, 8, 2)) == "POmega+(8,2)");
  CHECK(to_string(exceptional(LieFamily::TwistedF4p, 2)) == "2F4(2)'");
  CHECK_FALSE(parse_lie_id("PSL(2,x)"));
}

TEST_CASE("large subgroups and the five-halves bound") {
  CHECK(is_large(60, 12));
  CHECK_FALSE(is_large(60, 3));
  CHECK(is_large(262080, 4032));
  CHECK_FALSE(is_large(262080, 60));
  CHECK_THROWS_AS(is_large(60, 7), std::invalid_argument);
  CHECK(below_five_halves_power(51840, 96));
  CHECK_FALSE(below_five_halves_power(51840, 60));
}

TEST_CASE("unmodelled exceptional floor") {
  const auto P = [](unsigned e) { return bigint_pow(2, e); };
  // 2E6(2) from the generic order q^36 (q^12-1)(q^9+1)(q^8-1)(q^6-1)(q^5+1)(q^2-1) / (3, q+1).
  const BigInt e6_twisted = P(36) * (P(12) - 1) * (P(9) + 1) * (P(8) - 1) * (P(6) - 1) * (P(5) + 1) * (P(2) - 1) / 3;
  CHECK(e6_twisted == BigInt("76532479683774853939200"));
  CHECK(unmodelled_exceptional_floor() == e6_twisted);
  CHECK(unmodelled_exceptional_floor() > BigInt("1000000000000000000"));
}

TEST_CASE("enumeration") {
  CHECK(enumerate_lie_upto(1).empty());
  CHECK(enumerate_lie_upto(59).empty());
  const auto small = enumerate_lie_upto(60);
  REQUIRE(small.size() == 1);
  CHECK(small[0] == psl(2, 4));
  LieFilter sz;
  sz.families = {LieFamily::Sz};
  const auto s = enumerate_lie_upto(29120, sz);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == exceptional(LieFamily::Sz, 8));
  CHECK_THROWS_AS(enumerate_lie_upto(BigInt("1000000000000000001")), std::invalid_argument);

  // Brute-force oracle: every family and parameter in a generous box, filtered by order.
  const BigInt bound("1000000000");
  std::vector<LieGroupId> expected;
  for (int n = 2; n <= 12; ++n)
    for (long long q = 2; q <= 3000; ++q) {
      for (const auto& id : {psl(n, q), psu(n, q), psp(n, q), pomega(0, n, q), pomega(1, n, q), pomega(-1, n, q)})
        if (is_valid(id) && canonical_representative(id) == id && lie_order(id) <= bound) expected.push_back(id);
      if (n == 2)
        for (auto fam : {LieFamily::G2, LieFamily::F4, LieFamily::Sz, LieFamily::Ree2G2, LieFamily::D4_3})
          if (is_valid(exceptional(fam, q)) && lie_order(exceptional(fam, q)) <= bound)
            expected.push_back(exceptional(fam, q));
    }
  expected.push_back(exceptional(LieFamily::TwistedF4p, 2));
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  CHECK(enumerate_lie_upto(bound) == expected);

  std::map<int, int> by_family;
  for (const auto& id : enumerate_lie_upto(bound)) ++by_family[static_cast<int>(id.family)];
  CHECK(by_family[static_cast<int>(LieFamily::PSL)] > 0);
}

TEST_CASE("canonical representatives") {
  CHECK(canonical_representative(psl(2, 5)) == psl(2, 4));
  CHECK(canonical_representative(psl(3, 2)) == psl(2, 7));
  CHECK(canonical_representative(psp(4, 3)) == psu(4, 2));
  CHECK(canonical_representative(psl(2, 9)) == psl(2, 9));
}

TEST_CASE("non-large stabilizers force a large outer part") {
  // |T_P|^3 <= |T| and |G|^2 <= |G_P|^5 with G = T.A and G_P = T_P.A_P imply |A|^3 >= |T_P|.
  std::mt19937_64 rng(11);
  int premise_held = 0;
  for (int i = 0; i < 20000; ++i) {
    const BigInt tp = 1 + rng() % 5000;
    const BigInt t = tp * tp * tp * (1 + rng() % 4);
    const BigInt a = 1 + rng() % 40;
    BigInt ap = 1 + rng() % 40;
    while (a % ap != 0) ap = 1 + rng() % 40;
    const BigInt g = t * a;
    const BigInt gp = tp * ap;
    if (g * g > bigint_pow(gp, 5)) continue;
    ++premise_held;
    CHECK(a * a * a >= tp);
  }
  CHECK(premise_held > 0);
}

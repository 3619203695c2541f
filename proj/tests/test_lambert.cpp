#include "doctest.h"

#include <boost/math/special_functions/lambert_w.hpp>

#include "gqkit/lambert.hpp"

using namespace gqkit;

TEST_CASE("lower branch against boost and the defining equation") {
  for (int m : {3, 6, 9, 12, 18, 27, 100, 1000, 100000}) {
    const Float50 z = Float50(-1) / m;
    const Float50 w = lambert_wm1(z);
    const Float50 ref = boost::math::lambert_wm1(z);
    CHECK(abs((w - ref) / ref) < Float50("1e-40"));
    CHECK(w < -1);
    CHECK(abs(w * exp(w) - z) < Float50("1e-45"));
  }
  for (const char* x : {"-1.5", "-2", "-7.25", "-30"}) {
    const Float50 v(x);
    CHECK(abs(lambert_wm1(v * exp(v)) - v) < Float50("1e-40"));
  }
  CHECK_THROWS_AS(lambert_wm1(Float50("-0.5")), std::domain_error);
  CHECK_THROWS_AS(lambert_wm1(Float50("0.1")), std::domain_error);
}

TEST_CASE("certified thresholds") {
  const BoundRecord a1 = lambert_thresholds(1);
  CHECK(a1.tp_bound == 29410);
  CHECK(a1.t_bound == BigInt("118518040738"));
  const BoundRecord a2 = lambert_thresholds(2);
  CHECK(a2.tp_bound == 484596);
  CHECK(a2.t_bound == BigInt("908532744261494"));
  const BoundRecord a3 = lambert_thresholds(3);
  CHECK(a3.tp_bound == 2289183);
  CHECK(a3.t_bound == BigInt("113798703080610442"));
  CHECK(a3.digits == 50);
  CHECK_THROWS_AS(lambert_thresholds(0), std::invalid_argument);
  CHECK_THROWS_AS(lambert_thresholds(4), std::invalid_argument);
}

TEST_CASE("thresholds bound the inequality they come from") {
  // Below the bound x < 27 alpha^3 log(x)^3 fails just above it.
  for (int alpha = 1; alpha <= 3; ++alpha) {
    const BoundRecord r = lambert_thresholds(alpha);
    const auto holds = [&](const BigInt& x) {
      const Float50 v(x);
      return v < 27 * alpha * alpha * alpha * pow(log(v), 3);
    };
    CHECK(holds(r.tp_bound - 1));
    CHECK_FALSE(holds(r.tp_bound));
  }
}

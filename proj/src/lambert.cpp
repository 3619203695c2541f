#include "gqkit/lambert.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace gqkit {

namespace mp = boost::multiprecision;

namespace {

template <class F>
F wm1_halley(const F& z) {
  const F inv_e = F(-1) / mp::exp(F(1));
  if (!(z > inv_e && z < 0)) throw std::domain_error("W_{-1} is real only on (-1/e, 0)");
  // Asymptotic start: L1 - L2 + L2 / L1 with L1 = log(-z), L2 = log(-L1).
  const F l1 = mp::log(-z);
  const F l2 = mp::log(-l1);
  F w = l1 - l2 + l2 / l1;
  const F tol = std::numeric_limits<F>::epsilon() * 16;
  for (int iter = 0; iter < 200; ++iter) {
    const F ew = mp::exp(w);
    const F fw = w * ew - z;
    const F step = fw / (ew * (w + 1) - (w + 2) * fw / (2 * w + 2));
    w -= step;
    if (mp::abs(step) <= tol * mp::abs(w)) break;
  }
  return w;
}

template <class F>
BigInt ceil_to_bigint(const F& x) {
  F c = mp::ceil(x);
  return c.template convert_to<BigInt>();
}

// One attempt at the working precision of F; empty when the interval straddles an integer.
template <class F>
std::optional<BigInt> try_ceiling(int k, int m) {
  const F z = F(-1) / m;
  const F w = wm1_halley(z);
  const int digits = std::numeric_limits<F>::digits10;
  const F delta = mp::abs(w) * mp::pow(F(10), -(digits * 2) / 3);
  // w e^w - z decreases through zero on w < -1, so the root lies in [lo, hi] when the signs differ.
  const F lo = w - delta;
  const F hi = w + delta;
  const F g_lo = lo * mp::exp(lo) - z;
  const F g_hi = hi * mp::exp(hi) - z;
  if (!(g_lo > 0 && g_hi < 0)) return std::nullopt;
  const F slack = 1 + mp::pow(F(10), -(digits - 5));
  const F v_lo = mp::exp(-k * hi) / slack;
  const F v_hi = mp::exp(-k * lo) * slack;
  const BigInt c_lo = ceil_to_bigint(v_lo);
  const BigInt c_hi = ceil_to_bigint(v_hi);
  if (c_lo != c_hi) return std::nullopt;
  return c_lo;
}

}  // namespace

Float50 lambert_wm1(const Float50& z) { return wm1_halley(z); }

BigInt certified_ceiling(int k, int m, int* digits_used) {
  using F100 = mp::number<mp::cpp_bin_float<100>>;
  using F200 = mp::number<mp::cpp_bin_float<200>>;
  if (auto r = try_ceiling<Float50>(k, m)) {
    if (digits_used) *digits_used = 50;
    return *r;
  }
  if (auto r = try_ceiling<F100>(k, m)) {
    if (digits_used) *digits_used = 100;
    return *r;
  }
  if (auto r = try_ceiling<F200>(k, m)) {
    if (digits_used) *digits_used = 200;
    return *r;
  }
  throw numeric_error("ceiling of exp(-" + std::to_string(k) + " W(-1/" + std::to_string(m) +
                      ")) not certified at 200 digits");
}

BoundRecord lambert_thresholds(int alpha) {
  if (alpha < 1 || alpha > 3) throw std::invalid_argument("alpha must be 1, 2 or 3");
  BoundRecord r;
  r.alpha = alpha;
  int d1 = 0, d2 = 0;
  r.tp_bound = certified_ceiling(3, 9 * alpha, &d1);
  r.t_bound = certified_ceiling(9, 6 * alpha, &d2);
  r.digits = std::max(d1, d2);
  return r;
}

}  // namespace gqkit

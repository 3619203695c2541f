#include "gqkit/lietype.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>

#include "gqkit/finite_field.hpp"

namespace gqkit {

namespace {

BigInt qpow(long long q, long long e) { return bigint_pow(BigInt(q), static_cast<unsigned>(e)); }

long long gcd_ll(const BigInt& a, long long b) { return static_cast<long long>(bigint_gcd(a, BigInt(b))); }

std::vector<long long> prime_powers_upto(long long limit) {
  std::vector<int> spf(limit + 1, 0);
  std::vector<long long> out;
  for (long long i = 2; i <= limit; ++i) {
    if (spf[i] == 0)
      for (long long j = i; j <= limit; j += i)
        if (spf[j] == 0) spf[j] = static_cast<int>(i);
    long long x = i;
    const int p = spf[i];
    while (x % p == 0) x /= p;
    if (x == 1) out.push_back(i);
  }
  return out;
}

}  // namespace

std::string to_string(LieFamily family) {
  switch (family) {
    case LieFamily::PSL: return "PSL";
    case LieFamily::PSU: return "PSU";
    case LieFamily::PSp: return "PSp";
    case LieFamily::POmega: return "POmega";
    case LieFamily::G2: return "G2";
    case LieFamily::F4: return "F4";
    case LieFamily::Sz: return "Sz";
    case LieFamily::Ree2G2: return "2G2";
    case LieFamily::TwistedF4p: return "2F4'";
    case LieFamily::D4_3: return "3D4";
  }
  return "?";
}

int LieGroupId::p() const { return prime_power_decompose(q).first; }
int LieGroupId::f() const { return prime_power_decompose(q).second; }

LieGroupId psl(int n, long long q) { return {LieFamily::PSL, n, q, 0}; }
LieGroupId psu(int n, long long q) { return {LieFamily::PSU, n, q, 0}; }
LieGroupId psp(int n, long long q) { return {LieFamily::PSp, n, q, 0}; }
LieGroupId pomega(int epsilon, int n, long long q) { return {LieFamily::POmega, n, q, epsilon}; }
LieGroupId exceptional(LieFamily family, long long q) { return {family, 0, q, 0}; }

std::string to_string(const LieGroupId& id) {
  const std::string q = std::to_string(id.q);
  switch (id.family) {
    case LieFamily::POmega: {
      const std::string sign = id.epsilon > 0 ? "+" : id.epsilon < 0 ? "-" : "";
      return "POmega" + sign + "(" + std::to_string(id.n) + "," + q + ")";
    }
    case LieFamily::PSL:
    case LieFamily::PSU:
    case LieFamily::PSp: return to_string(id.family) + "(" + std::to_string(id.n) + "," + q + ")";
    case LieFamily::TwistedF4p: return "2F4(2)'";
    default: return to_string(id.family) + "(" + q + ")";
  }
}

std::optional<LieGroupId> parse_lie_id(const std::string& text) {
  static const std::regex classical(R"((PSL|PSU|PSp|POmega)([+-]?)\((\d+),(\d+)\))");
  static const std::regex exc(R"((G2|F4|Sz|2G2|3D4)\((\d+)\))");
  std::smatch m;
  if (text == "2F4(2)'") return exceptional(LieFamily::TwistedF4p, 2);
  if (std::regex_match(text, m, classical)) {
    const std::string fam = m[1];
    const std::string sign = m[2];
    const int n = std::stoi(m[3]);
    const long long q = std::stoll(m[4]);
    if (fam == "POmega") return pomega(sign == "+" ? 1 : sign == "-" ? -1 : 0, n, q);
    if (!sign.empty()) return std::nullopt;
    if (fam == "PSL") return psl(n, q);
    if (fam == "PSU") return psu(n, q);
    return psp(n, q);
  }
  if (std::regex_match(text, m, exc)) {
    const std::string fam = m[1];
    const long long q = std::stoll(m[2]);
    if (fam == "G2") return exceptional(LieFamily::G2, q);
    if (fam == "F4") return exceptional(LieFamily::F4, q);
    if (fam == "Sz") return exceptional(LieFamily::Sz, q);
    if (fam == "2G2") return exceptional(LieFamily::Ree2G2, q);
    return exceptional(LieFamily::D4_3, q);
  }
  return std::nullopt;
}

void validate(const LieGroupId& id) {
  const auto bad = [&](const std::string& why) { throw std::invalid_argument(to_string(id) + ": " + why); };
  const auto [p, f] = prime_power_decompose(id.q);
  if (p == 0) bad("q is not a prime power");
  if (id.family != LieFamily::POmega && id.epsilon != 0) bad("epsilon is only used for POmega");
  switch (id.family) {
    case LieFamily::PSL:
      if (id.n < 2) bad("needs n >= 2");
      if (id.n == 2 && id.q < 4) bad("PSL(2,q) needs q >= 4");
      break;
    case LieFamily::PSU:
      if (id.n < 3) bad("needs n >= 3");
      if (id.n == 3 && id.q < 3) bad("PSU(3,q) needs q >= 3");
      break;
    case LieFamily::PSp:
      if (id.n < 4 || id.n % 2) bad("needs even n >= 4");
      if (id.n == 4 && id.q == 2) bad("PSp(4,2) is not simple");
      break;
    case LieFamily::POmega:
      if (id.epsilon == 0) {
        if (id.n < 7 || id.n % 2 == 0) bad("odd-dimensional POmega needs odd n >= 7");
        if (p == 2) bad("odd-dimensional POmega needs q odd");
      } else {
        if (id.epsilon != 1 && id.epsilon != -1) bad("epsilon must be +1, -1 or 0");
        if (id.n < 8 || id.n % 2) bad("even-dimensional POmega needs even n >= 8");
      }
      break;
    case LieFamily::G2:
      if (id.q < 3) bad("G2(q) needs q >= 3");
      break;
    case LieFamily::Sz:
      if (p != 2 || f % 2 == 0 || id.q < 8) bad("Sz(q) needs q = 2^(2m+1) >= 8");
      break;
    case LieFamily::Ree2G2:
      if (p != 3 || f % 2 == 0 || id.q < 27) bad("2G2(q) needs q = 3^(2m+1) >= 27");
      break;
    case LieFamily::TwistedF4p:
      if (id.q != 2) bad("only the Tits group 2F4(2)' is modelled");
      break;
    case LieFamily::F4:
    case LieFamily::D4_3: break;
  }
  if (id.family != LieFamily::PSL && id.family != LieFamily::PSU && id.family != LieFamily::PSp &&
      id.family != LieFamily::POmega && id.n != 0)
    bad("exceptional families take n = 0");
}

bool is_valid(const LieGroupId& id) {
  try {
    validate(id);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

BigInt lie_order(const LieGroupId& id) {
  validate(id);
  const long long q = id.q;
  const int n = id.n;
  BigInt r = 1;
  switch (id.family) {
    case LieFamily::PSL: {
      r = qpow(q, 1LL * n * (n - 1) / 2);
      for (int i = 2; i <= n; ++i) r *= qpow(q, i) - 1;
      return r / std::gcd(static_cast<long long>(n), q - 1);
    }
    case LieFamily::PSU: {
      r = qpow(q, 1LL * n * (n - 1) / 2);
      for (int i = 2; i <= n; ++i) r *= i % 2 ? BigInt(qpow(q, i) + 1) : BigInt(qpow(q, i) - 1);
      return r / std::gcd(static_cast<long long>(n), q + 1);
    }
    case LieFamily::PSp: {
      const int m = n / 2;
      r = qpow(q, 1LL * m * m);
      for (int i = 1; i <= m; ++i) r *= qpow(q, 2 * i) - 1;
      return r / std::gcd(2LL, q - 1);
    }
    case LieFamily::POmega: {
      if (id.epsilon == 0) {
        const int m = (n - 1) / 2;
        r = qpow(q, 1LL * m * m);
        for (int i = 1; i <= m; ++i) r *= qpow(q, 2 * i) - 1;
        return r / 2;
      }
      const int m = n / 2;
      const BigInt qm = qpow(q, m);
      r = qpow(q, 1LL * m * (m - 1)) * (id.epsilon > 0 ? BigInt(qm - 1) : BigInt(qm + 1));
      for (int i = 1; i < m; ++i) r *= qpow(q, 2 * i) - 1;
      return r / gcd_ll(id.epsilon > 0 ? BigInt(qm - 1) : BigInt(qm + 1), 4);
    }
    case LieFamily::G2: return qpow(q, 6) * (qpow(q, 6) - 1) * (qpow(q, 2) - 1);
    case LieFamily::F4:
      return qpow(q, 24) * (qpow(q, 12) - 1) * (qpow(q, 8) - 1) * (qpow(q, 6) - 1) * (qpow(q, 2) - 1);
    case LieFamily::Sz: return qpow(q, 2) * (qpow(q, 2) + 1) * (q - 1);
    case LieFamily::Ree2G2: return qpow(q, 3) * (qpow(q, 3) + 1) * (q - 1);
    case LieFamily::TwistedF4p: return BigInt(17971200);
    case LieFamily::D4_3: return qpow(q, 12) * (qpow(q, 8) + qpow(q, 4) + 1) * (qpow(q, 6) - 1) * (qpow(q, 2) - 1);
  }
  throw std::invalid_argument("unknown family");
}

BigInt out_order(const LieGroupId& id) {
  validate(id);
  const long long q = id.q;
  const long long f = id.f();
  const bool even = id.p() == 2;
  const long long d2 = std::gcd(2LL, q - 1);
  switch (id.family) {
    case LieFamily::PSL:
      if (id.n == 2) return BigInt(d2 * f);
      return BigInt(std::gcd(static_cast<long long>(id.n), q - 1) * 2 * f);
    case LieFamily::PSU: return BigInt(std::gcd(static_cast<long long>(id.n), q + 1) * 2 * f);
    case LieFamily::PSp:
      if (id.n == 4 && even) return BigInt(2 * f);
      return BigInt(d2 * f);
    case LieFamily::POmega: {
      if (id.epsilon == 0) return BigInt(2 * f);
      if (id.epsilon > 0 && id.n == 8) return BigInt((even ? 6 : 24) * f);
      const BigInt qm = qpow(q, id.n / 2);
      return BigInt(gcd_ll(id.epsilon > 0 ? BigInt(qm - 1) : BigInt(qm + 1), 4) * 2 * f);
    }
    case LieFamily::G2: return BigInt((id.p() == 3 ? 2 : 1) * f);
    case LieFamily::F4: return BigInt((even ? 2 : 1) * f);
    case LieFamily::Sz:
    case LieFamily::Ree2G2: return BigInt(f);
    case LieFamily::TwistedF4p: return BigInt(2);
    case LieFamily::D4_3: return BigInt(3 * f);
  }
  throw std::invalid_argument("unknown family");
}

bool is_large(const BigInt& t_order, const BigInt& h_order) {
  if (h_order <= 0 || t_order % h_order != 0) throw std::invalid_argument("subgroup order does not divide the group order");
  return t_order < h_order * h_order * h_order;
}

bool below_five_halves_power(const BigInt& g_order, const BigInt& gp_order) {
  return g_order * g_order < bigint_pow(gp_order, 5);
}

BigInt unmodelled_exceptional_floor() {
  const auto P = [](long long e) { return qpow(2, e); };
  const BigInt e6 = P(36) * (P(12) - 1) * (P(9) - 1) * (P(8) - 1) * (P(6) - 1) * (P(5) - 1) * (P(2) - 1);
  const BigInt e6_twisted = P(36) * (P(12) - 1) * (P(9) + 1) * (P(8) - 1) * (P(6) - 1) * (P(5) + 1) * (P(2) - 1) / 3;
  const BigInt f4_twisted_8 = qpow(8, 12) * (qpow(8, 6) + 1) * (qpow(8, 4) - 1) * (qpow(8, 3) + 1) * 7;
  // E7 and E8 are larger than E6 over every field.
  return std::min({e6, e6_twisted, f4_twisted_8});
}

LieGroupId canonical_representative(const LieGroupId& id) {
  if (id == psl(2, 5)) return psl(2, 4);
  if (id == psl(3, 2)) return psl(2, 7);
  if (id == psp(4, 3)) return psu(4, 2);
  return id;
}

std::vector<LieGroupId> enumerate_lie_upto(const BigInt& bound, const LieFilter& filter) {
  if (bound > BigInt("1000000000000000000")) throw std::invalid_argument("enumeration bound is capped at 10^18");
  std::vector<LieGroupId> out;
  if (bound < 1) return out;
  const auto wanted = [&](LieFamily fam) { return filter.families.empty() || filter.families.count(fam); };
  // PSL(2,q) has the slowest growth in q: |PSL(2,q)| >= q^3 / 2 - q.
  long long q_limit = 8;
  while (BigInt(q_limit) * q_limit * q_limit <= 8 * bound + 16 * q_limit) q_limit *= 2;
  const auto powers = prime_powers_upto(q_limit);

  const auto push = [&](const LieGroupId& id) {
    if (canonical_representative(id) != id) return;
    if (filter.accept && !filter.accept(id)) return;
    out.push_back(id);
  };
  // |T| times the largest possible centre order grows with q, so the scan can stop once it passes the bound.
  const auto scan_q = [&](auto make, long long centre) {
    bool any = false;
    for (long long q : powers) {
      const LieGroupId id = make(q);
      if (!is_valid(id)) continue;
      const BigInt order = lie_order(id);
      if (order > bound * centre) break;
      if (order > bound) continue;
      any = true;
      push(id);
    }
    return any;
  };

  if (wanted(LieFamily::PSL))
    for (int n = 2; scan_q([n](long long q) { return psl(n, q); }, n) || n < 3; ++n) {}
  if (wanted(LieFamily::PSU))
    for (int n = 3; scan_q([n](long long q) { return psu(n, q); }, n) || n < 4; ++n) {}
  if (wanted(LieFamily::PSp))
    for (int n = 4; scan_q([n](long long q) { return psp(n, q); }, 2) || n < 6; n += 2) {}
  if (wanted(LieFamily::POmega)) {
    for (int n = 7; scan_q([n](long long q) { return pomega(0, n, q); }, 2); n += 2) {}
    for (int n = 8;; n += 2) {
      const bool minus = scan_q([n](long long q) { return pomega(-1, n, q); }, 4);
      const bool plus = scan_q([n](long long q) { return pomega(1, n, q); }, 4);
      if (!minus && !plus) break;
    }
  }
  for (auto fam : {LieFamily::G2, LieFamily::F4, LieFamily::Sz, LieFamily::Ree2G2, LieFamily::D4_3})
    if (wanted(fam)) scan_q([fam](long long q) { return exceptional(fam, q); }, 1);
  if (wanted(LieFamily::TwistedF4p) && lie_order(exceptional(LieFamily::TwistedF4p, 2)) <= bound)
    push(exceptional(LieFamily::TwistedF4p, 2));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gqkit

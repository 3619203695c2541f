#include "gqkit/finite_field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gqkit {

namespace {

bool is_prime_int(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Non-prime orders; constant term first, monic.
const std::map<int, std::vector<int>>& modulus_table() {
  static const std::map<int, std::vector<int>> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {9, {1, 0, 1}},
      {16, {1, 1, 0, 0, 1}},
      {25, {1, 1, 1}},
      {27, {1, 2, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {49, {1, 0, 1}},
      {64, {1, 1, 0, 1, 1, 0, 1}},
      {81, {2, 0, 0, 2, 1}},
      {121, {2, 7, 1}},
      {125, {3, 3, 0, 1}},
      {128, {1, 1, 0, 0, 0, 0, 0, 1}},
      {169, {2, 1, 1}},
      {243, {1, 2, 0, 0, 0, 1}},
      {256, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {289, {3, 1, 1}},
      {343, {2, 3, 0, 1}},
      {361, {2, 1, 1}},
      {512, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
  };
  return table;
}

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

// Smallest monic factor of degree 1..deg/2, or empty when irreducible.
Poly find_factor(const Poly& m, int p) {
  const int deg = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      Poly cand(d + 1, 0);
      long long v = idx;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<int>(v % p);
        v /= p;
      }
      cand[d] = 1;
      if (poly_mod(m, cand, p).empty()) return cand;
    }
  }
  return {};
}

}  // namespace

std::pair<int, int> prime_power_decompose(long long q) {
  if (q < 2) return {0, 0};
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<int>(q), 1};
  int f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return {0, 0};
  return {static_cast<int>(p), f};
}

bool is_prime_power(long long q) { return prime_power_decompose(q).first != 0; }

std::string polynomial_to_string(const std::vector<int>& coeffs, char var) {
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const int c = coeffs[i];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c;
    out << var;
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

FieldSpec standard_field_spec(int q) {
  if (q < 2 || q > kMaxFieldOrder) throw field_error("unsupported field order " + std::to_string(q));
  if (is_prime_int(q)) return FieldSpec{q, 1, {0, 1}};
  const auto [p, f] = prime_power_decompose(q);
  if (p == 0) throw field_error(std::to_string(q) + " is not a prime power");
  const auto& table = modulus_table();
  const auto it = table.find(q);
  if (it == table.end()) throw field_error("no shipped modulus for GF(" + std::to_string(q) + ")");
  return FieldSpec{p, f, it->second};
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const int p = spec_.p;
  const int f = spec_.f;
  if (!is_prime_int(p)) throw field_error("characteristic " + std::to_string(p) + " is not prime");
  if (f < 1) throw field_error("field degree must be positive");
  if (static_cast<int>(spec_.modulus.size()) != f + 1) throw field_error("modulus must have f+1 coefficients");
  for (int c : spec_.modulus)
    if (c < 0 || c >= p) throw field_error("modulus coefficient out of range");
  if (spec_.modulus.back() != 1) throw field_error("modulus must be monic");
  long long q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw field_error("field order exceeds " + std::to_string(kMaxFieldOrder));
  }
  q_ = static_cast<int>(q);

  if (const Poly factor = find_factor(spec_.modulus, p); !factor.empty()) {
    throw reducible_modulus_error("modulus " + polynomial_to_string(spec_.modulus) + " is reducible over GF(" +
                                      std::to_string(p) + "): divisible by " + polynomial_to_string(factor),
                                  factor);
  }

  std::vector<Poly> polys(q_);
  for (int code = 0; code < q_; ++code) {
    Poly c(f, 0);
    int v = code;
    for (int i = f - 1; i >= 0; --i) {
      c[i] = v % p;
      v /= p;
    }
    polys[code] = std::move(c);
  }
  one_ = FieldElement{encode([&] {
    Poly c(f, 0);
    c[0] = 1;
    return c;
  }())};

  add_.assign(static_cast<std::size_t>(q_) * q_, 0);
  mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  frob_.assign(q_, 0);

  Poly sum(f);
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      for (int i = 0; i < f; ++i) sum[i] = (polys[a][i] + polys[b][i]) % p;
      add_[a * q_ + b] = encode(sum);
    }
    for (int i = 0; i < f; ++i) sum[i] = (p - polys[a][i]) % p;
    neg_[a] = encode(sum);
  }
  for (int a = 0; a < q_; ++a) {
    for (int b = a; b < q_; ++b) {
      Poly prod(2 * f - 1, 0);
      for (int i = 0; i < f; ++i) {
        if (polys[a][i] == 0) continue;
        for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p;
      }
      Poly r = poly_mod(prod, spec_.modulus, p);
      r.resize(f, 0);
      const std::uint16_t c = encode(r);
      mul_[a * q_ + b] = c;
      mul_[b * q_ + a] = c;
    }
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == one_.code) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
  for (int a = 0; a < q_; ++a) frob_[a] = pow(FieldElement(static_cast<std::uint16_t>(a)), p).code;
}

std::uint16_t Field::encode(const std::vector<int>& coeffs) const {
  int code = 0;
  for (int i = 0; i < spec_.f; ++i) code = code * spec_.p + coeffs[i];
  return static_cast<std::uint16_t>(code);
}

FieldElement Field::generator() const {
  Poly c(spec_.f, 0);
  if (spec_.f == 1) {
    // x reduces to minus the constant term of the linear modulus.
    c[0] = (spec_.p - spec_.modulus[0]) % spec_.p;
  } else {
    c[1] = 1;
  }
  return FieldElement{encode(c)};
}

FieldElement Field::from_int(long long k) const {
  Poly c(spec_.f, 0);
  c[0] = static_cast<int>(((k % spec_.p) + spec_.p) % spec_.p);
  return FieldElement{encode(c)};
}

FieldElement Field::from_coeffs(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != spec_.f) throw field_error("expected " + std::to_string(spec_.f) + " coefficients");
  for (int c : coeffs)
    if (c < 0 || c >= spec_.p) throw field_error("coefficient out of range");
  return FieldElement{encode(coeffs)};
}

std::vector<int> Field::coeffs(FieldElement a) const {
  Poly c(spec_.f, 0);
  int v = a.code;
  for (int i = spec_.f - 1; i >= 0; --i) {
    c[i] = v % spec_.p;
    v /= spec_.p;
  }
  return c;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (int c = 0; c < q_; ++c) out.emplace_back(static_cast<std::uint16_t>(c));
  return out;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw field_error("inverse of zero");
  return FieldElement{inv_[a.code]};
}

FieldElement Field::pow(FieldElement a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  FieldElement result = one_;
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement Field::frobenius(FieldElement a, int k) const {
  k %= spec_.f;
  if (k < 0) k += spec_.f;
  for (int i = 0; i < k; ++i) a = frobenius(a);
  return a;
}

std::string Field::to_string(FieldElement a) const { return polynomial_to_string(coeffs(a)); }

Field ff_make(const FieldSpec& spec) { return Field(spec); }

Field make_standard_field(int q) { return Field(standard_field_spec(q)); }

}  // namespace gqkit

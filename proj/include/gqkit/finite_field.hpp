#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gqkit {

class field_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a modulus has a proper factor over the prime field.
class reducible_modulus_error : public field_error {
public:
  reducible_modulus_error(const std::string& what, std::vector<int> factor)
      : field_error(what), factor_(std::move(factor)) {}

  /// Monic factor, constant term first.
  const std::vector<int>& factor() const { return factor_; }

private:
  std::vector<int> factor_;
};

/// GF(p^f) presented as GF(p)[x] / (modulus). Coefficients are constant term first.
struct FieldSpec {
  int p = 0;
  int f = 0;
  std::vector<int> modulus;
};

/// Largest field order the tables are built for.
inline constexpr int kMaxFieldOrder = 512;

/// Shipped modulus for GF(q), q a prime power up to kMaxFieldOrder.
/// Throws field_error for unsupported q.
FieldSpec standard_field_spec(int q);

/// Returns (p, f) when q = p^f with f >= 1, otherwise (0, 0).
std::pair<int, int> prime_power_decompose(long long q);
bool is_prime_power(long long q);

std::string polynomial_to_string(const std::vector<int>& coeffs, char var = 'x');

/// An element of a Field, identified by its code.
///
/// The code orders coefficient vectors lexicographically with the constant
/// term most significant, so comparing codes compares coefficients.
struct FieldElement {
  std::uint16_t code = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint16_t c) : code(c) {}

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field {
public:
  explicit Field(FieldSpec spec);

  int p() const { return spec_.p; }
  int f() const { return spec_.f; }
  int q() const { return q_; }
  const FieldSpec& spec() const { return spec_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return one_; }
  /// The class of x in GF(p)[x]/(modulus).
  FieldElement generator() const;
  /// Image of an integer under Z -> GF(p).
  FieldElement from_int(long long k) const;
  FieldElement from_coeffs(const std::vector<int>& coeffs) const;
  std::vector<int> coeffs(FieldElement a) const;
  /// All q elements in code order.
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement a, FieldElement b) const { return FieldElement{add_[a.code * q_ + b.code]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement neg(FieldElement a) const { return FieldElement{neg_[a.code]}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return FieldElement{mul_[a.code * q_ + b.code]}; }
  /// Throws field_error on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, long long e) const;
  /// x -> x^p.
  FieldElement frobenius(FieldElement a) const { return FieldElement{frob_[a.code]}; }
  /// x -> x^(p^k).
  FieldElement frobenius(FieldElement a, int k) const;

  bool is_zero(FieldElement a) const { return a.code == 0; }
  std::string to_string(FieldElement a) const;

private:
  std::uint16_t encode(const std::vector<int>& coeffs) const;

  FieldSpec spec_;
  int q_ = 0;
  FieldElement one_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint16_t> frob_;
};

/// Builds the field, verifying the modulus.
Field ff_make(const FieldSpec& spec);
Field make_standard_field(int q);

}  // namespace gqkit

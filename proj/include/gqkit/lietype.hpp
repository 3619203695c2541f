#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gqkit/bigint.hpp"

namespace gqkit {

enum class LieFamily { PSL, PSU, PSp, POmega, G2, F4, Sz, Ree2G2, TwistedF4p, D4_3 };

std::string to_string(LieFamily family);

/// A simple group of Lie type. n is the dimension of the natural module for
/// the classical families and 0 for the exceptional ones. epsilon is +1 or -1
/// for POmega in even dimension and 0 otherwise.
struct LieGroupId {
  LieFamily family = LieFamily::PSL;
  int n = 0;
  long long q = 0;
  int epsilon = 0;

  int p() const;
  int f() const;

  friend auto operator<=>(const LieGroupId&, const LieGroupId&) = default;
};

LieGroupId psl(int n, long long q);
LieGroupId psu(int n, long long q);
LieGroupId psp(int n, long long q);
LieGroupId pomega(int epsilon, int n, long long q);
LieGroupId exceptional(LieFamily family, long long q);

/// Names such as "PSL(2,64)", "POmega+(8,2)", "POmega(7,3)", "Sz(8)", "2G2(27)", "2F4(2)'", "3D4(2)".
std::string to_string(const LieGroupId& id);
std::optional<LieGroupId> parse_lie_id(const std::string& text);

/// Throws std::invalid_argument when the parameters do not describe a simple group.
void validate(const LieGroupId& id);
bool is_valid(const LieGroupId& id);

BigInt lie_order(const LieGroupId& id);
BigInt out_order(const LieGroupId& id);

/// |T| < |H|^3. Throws std::invalid_argument unless |H| divides |T|.
bool is_large(const BigInt& t_order, const BigInt& h_order);

/// |G|^2 < |G_P|^5, the integer form of |G| < |G_P|^(5/2).
bool below_five_halves_power(const BigInt& g_order, const BigInt& gp_order);

/// Orders below this constant are never reached by the E-series, 2E6 or 2F4(q) with q > 2,
/// which the enumeration does not model.
BigInt unmodelled_exceptional_floor();

/// Keeps PSL(2,4) over PSL(2,5), PSL(2,7) over PSL(3,2) and PSU(4,2) over PSp(4,3).
/// Returns the representative kept for id.
LieGroupId canonical_representative(const LieGroupId& id);

struct LieFilter {
  /// Empty means every family.
  std::set<LieFamily> families;
  std::function<bool(const LieGroupId&)> accept;
};

/// Every valid canonical id of order at most bound accepted by the filter, in
/// (family, n, q, epsilon) order. Throws std::invalid_argument for bound > 10^18.
std::vector<LieGroupId> enumerate_lie_upto(const BigInt& bound, const LieFilter& filter = {});

}  // namespace gqkit

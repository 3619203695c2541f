#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gqkit/bigint.hpp"

namespace gqkit {

class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Float50 = boost::multiprecision::cpp_bin_float_50;

/// Lower real branch W_{-1} on (-1/e, 0), by Halley iteration. Throws std::domain_error outside.
Float50 lambert_wm1(const Float50& z);

struct BoundRecord {
  int alpha = 0;
  /// ceil(exp(-3 W_{-1}(-1/(9 alpha)))).
  BigInt tp_bound;
  /// ceil(exp(-9 W_{-1}(-1/(6 alpha)))).
  BigInt t_bound;
  /// Decimal digits needed before both ceilings were certified.
  int digits = 0;
};

/// ceil(exp(-k W_{-1}(-1/m))), certified: the root is bracketed by a sign
/// change and both ends of the resulting interval must share a ceiling.
/// Throws numeric_error if 200 digits do not suffice.
BigInt certified_ceiling(int k, int m, int* digits_used = nullptr);

/// Throws std::invalid_argument unless alpha is 1, 2 or 3.
BoundRecord lambert_thresholds(int alpha);

}  // namespace gqkit

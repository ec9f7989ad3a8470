#pragma once

#include <iosfwd>
#include <string>

#include "rbd/exactnum.hpp"

namespace rbd {

// sign * coefficient * pi^pi_power * sqrt(radicand).
//
// Canonical form: radicand square-free, coefficient > 0 and sign = +-1 for
// nonzero values; zero is (0, 0, pi^0, sqrt(1)). Equality compares
// canonical forms, so it is exact.
struct SymbolicValue {
  int sign = 0;
  Rat coefficient;
  unsigned pi_power = 0;
  BigInt radicand = 1;

  bool is_zero() const;
  std::string to_string() const;  // e.g. "-4*pi*sqrt(2)", "8/3*pi*sqrt(6)"
  // The square as a canonical value: coefficient^2 * radicand * pi^(2a).
  SymbolicValue squared() const;

  friend bool operator==(const SymbolicValue& a, const SymbolicValue& b);
};

SymbolicValue canonicalize(const SymbolicValue& v);

// Decimal expansion truncated (not rounded) to `significant_digits`.
// Display only; pi is carried to 100 digits internally.
std::string to_decimal(const SymbolicValue& v, int significant_digits = 12);

std::ostream& operator<<(std::ostream& os, const SymbolicValue& v);

}  // namespace rbd

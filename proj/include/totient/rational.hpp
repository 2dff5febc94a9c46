#pragma once

#include <compare>
#include <string>

#include "totient/arith.hpp"

namespace totient {

// Exact nonnegative rational, always reduced, den >= 1. Comparisons go
// through 128-bit cross multiplication, so no rounding ever happens.
struct Rational {
  Nat num = 0;
  Nat den = 1;

  static Rational of(Nat n) { return Rational{n, 1}; }
  static Rational make(Nat num, Nat den);  // reduces; den must be nonzero

  bool is_integer() const { return den == 1; }
  Nat floor_value() const { return num / den; }

  // Multiply by mul_num/mul_den with cross reduction; overflow is an error.
  Rational times(Nat mul_num, Nat mul_den) const;
  Rational half() const;

  std::string str() const;  // "455/8", or "15" when integral
};

std::strong_ordering operator<=>(const Rational& a, const Rational& b);
bool operator==(const Rational& a, const Rational& b);
std::strong_ordering operator<=>(const Rational& a, Nat b);
bool operator==(const Rational& a, Nat b);

}  // namespace totient

#include "totient/rational.hpp"

#include <numeric>

#include "totient/errors.hpp"

namespace totient {
namespace {
using u128 = unsigned __int128;
}

Rational Rational::make(Nat num, Nat den) {
  if (den == 0) throw DomainError("rational: zero denominator");
  if (num > kNatMax || den > kNatMax)
    throw OverflowError("rational component exceeds 2^63-1");
  const Nat g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

Rational Rational::times(Nat mul_num, Nat mul_den) const {
  if (mul_den == 0) throw DomainError("rational: zero denominator");
  const Nat g0 = std::gcd(mul_num, mul_den);
  mul_num /= g0;
  mul_den /= g0;
  const Nat g1 = std::gcd(num, mul_den);
  const Nat g2 = std::gcd(mul_num, den);
  return Rational{checked_mul(num / g1, mul_num / g2),
                  checked_mul(den / g2, mul_den / g1)};
}

Rational Rational::half() const {
  if (num % 2 == 0) return Rational{num / 2, den};
  return Rational{num, checked_mul(den, 2)};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const u128 lhs = u128{a.num} * b.den;
  const u128 rhs = u128{b.num} * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const Rational& a, const Rational& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Rational& a, Nat b) {
  return a <=> Rational{b, 1};
}

bool operator==(const Rational& a, Nat b) { return a == Rational{b, 1}; }

}  // namespace totient

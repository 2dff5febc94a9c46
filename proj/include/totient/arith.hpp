#pragma once

#include <cstdint>
#include <vector>

namespace totient {

using Nat = std::uint64_t;

// Public operations accept values in [1, kNatMax]. Capping at 2^63-1 keeps
// every cross product of two values representable in unsigned 128-bit.
inline constexpr Nat kNatMax = (Nat{1} << 63) - 1;

// Throws DomainError unless 1 <= n <= kNatMax.
void check_nat_range(Nat n, const char* what);

// Overflow past kNatMax is a reported error, never wraparound.
Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);
Nat checked_pow(Nat base, Nat exp);

Nat gcd(Nat a, Nat b);

// Deterministic over the whole Nat range (fixed Miller-Rabin witness set).
bool is_prime(Nat n);

struct PrimePower {
  Nat prime;
  Nat exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization, strictly increasing by prime; empty only for n = 1.
std::vector<PrimePower> factorize(Nat n);

// Every divisor of n, ascending, including 1 and n.
std::vector<Nat> divisors(Nat n);

}  // namespace totient

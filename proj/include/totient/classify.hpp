#pragma once

#include <optional>
#include <vector>

#include "totient/arith.hpp"
#include "totient/preimage.hpp"

namespace totient {

// For prime p: 2p is a totient value exactly when 2p+1 is prime, and then
// phi(2p+1) = 2p. witness and safe_prime are both 2p+1 when that holds.
struct TwicePrimeVerdict {
  Nat p = 0;
  bool in_image = false;
  std::optional<Nat> witness;
  std::optional<Nat> safe_prime;
};

// A prime q = (p-1)/2 + k*p (k >= 1): then 2q+1 = p(1+2k) is composite, so
// 2q is a nontotient, and 2q is congruent to -1 mod p.
struct NontotientFamilyMember {
  Nat p = 0;
  Nat q = 0;
  Nat k = 0;
};

struct TwiceOddWitness {
  Nat p = 0;  // prime, p = 2s+1
  Nat s = 0;  // odd, phi(p) = 2s
};

struct TwicePrimeBound {
  Nat bound = 0;         // A(2p) = 6p+3
  Nat phi_of_bound = 0;  // phi(6p+3) = 4p
};

struct PowerTwoMultiple {
  Nat k = 0;
  Nat n = 0;      // 2^k (2p+1)
  Nat value = 0;  // phi(n) = 2^k p
};

bool is_sophie_germain(Nat p);  // p prime and 2p+1 prime
bool is_safe_prime(Nat q);      // q odd prime and (q-1)/2 prime

TwicePrimeVerdict classify_twice_prime(Nat p);  // DomainError unless p prime

// Closed form {2p+1, 4p+2}, no scanning; requires p >= 5 prime, 2p+1 prime.
PreimageSet twice_prime_preimage(Nat p);

// Requires p odd prime with 2p+1 prime.
TwicePrimeBound twice_prime_bound(Nat p);

// Members n = 2^k (2p+1) with phi(n) = 2^k p for k = 1..k_max; requires
// p prime with 2p+1 prime.
std::vector<PowerTwoMultiple> power_two_multiples(Nat p, Nat k_max);

// First `count` members of the family above for odd prime p, k ascending
// from 1. Each member is verified: p | 2q+1 and 2q is not a totient value.
std::vector<NontotientFamilyMember> nontotient_family(Nat p, Nat count);

// First `count` primes p = 3 (mod 4); each gives an odd s = (p-1)/2 with
// 2s = phi(p) a totient value.
std::vector<TwiceOddWitness> twice_odd_witnesses(Nat count);

}  // namespace totient

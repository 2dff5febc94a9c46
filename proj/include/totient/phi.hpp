#pragma once

#include "totient/arith.hpp"

namespace totient {

// Euler's totient, computed through the factorization of n.
Nat phi(Nat n);

// phi(p^alpha) = p^(alpha-1) (p-1); p must be prime, alpha >= 1.
Nat phi_of_prime_power(Nat p, Nat alpha);

// phi(p*m) without factoring p*m: (p-1) phi(m) when p does not divide m,
// p phi(m) when it does. p must be prime.
Nat phi_prime_multiple(Nat p, Nat m);

// phi(2m) without factoring 2m: phi(m) for odd m, 2 phi(m) for even m.
Nat phi_double(Nat m);

}  // namespace totient

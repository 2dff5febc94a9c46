#pragma once

#include <optional>
#include <vector>

#include "totient/arith.hpp"
#include "totient/rational.hpp"

namespace totient {

// A(m) = m * prod p/(p-1) over primes p with (p-1) | m. Defined for m = 1
// and even m; every n with phi(n) = m satisfies n <= A(m), and m < n except
// for the n = 1, 2 members of m = 1. floor is always exact (computed with
// arbitrary-width intermediates); value is the exact reduced fraction when
// it fits 64-bit components, absent otherwise (prime-rich m can push the
// reduced numerator past 2^63 even though the value itself is small).
struct GuptaBound {
  Nat m = 0;
  std::optional<Rational> value;
  Nat floor = 0;
  std::vector<Nat> contributing_primes;  // ascending; always contains 2
};

// Full solution set of phi(n) = m, split by parity. members is sorted and
// is exactly odd_members union even_members.
struct PreimageSet {
  Nat m = 0;
  std::vector<Nat> members;
  std::vector<Nat> odd_members;
  std::vector<Nat> even_members;
};

struct ParityCounts {
  Nat odd = 0;
  Nat even = 0;
};

struct BoundTableRow {
  Nat m = 0;
  Rational bound;
  std::optional<Nat> phi_of_bound;  // absent exactly when the bound is not integral
};

GuptaBound gupta_bound(Nat m);  // DomainError for odd m > 1

// floor(A(m)) alone, exact for the whole domain; the cheap entry point for
// scan-size questions. OverflowError only if the floor itself exceeds 2^63-1.
Nat gupta_floor(Nat m);  // DomainError for odd m > 1

// Exhaustive: scans (m, floor(A(m))]. Odd m > 1 short-circuits to the empty
// set without touching the bound. Empty is a value, not an error.
PreimageSet preimage(Nat m);

ParityCounts parity_counts(Nat m);

// A(m)/2: no odd n with phi(n) = m can exceed it. OverflowError when the
// exact fraction does not fit 64-bit components.
Rational odd_member_bound(Nat m);

// Rows for m = 1, 2, 4, 6, 8, 10, 12, 14.
std::vector<BoundTableRow> bound_table();

}  // namespace totient

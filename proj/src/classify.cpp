#include "totient/classify.hpp"

#include <stdexcept>

#include "totient/errors.hpp"
#include "totient/phi.hpp"

namespace totient {
namespace {

Nat two_p_plus_one(Nat p) { return checked_add(checked_mul(2, p), 1); }

}  // namespace

bool is_sophie_germain(Nat p) {
  check_nat_range(p, "is_sophie_germain");
  if (!is_prime(p)) return false;
  return is_prime(two_p_plus_one(p));
}

bool is_safe_prime(Nat q) {
  check_nat_range(q, "is_safe_prime");
  if (q % 2 == 0 || !is_prime(q)) return false;
  const Nat half = (q - 1) / 2;
  return half >= 2 && is_prime(half);
}

TwicePrimeVerdict classify_twice_prime(Nat p) {
  check_nat_range(p, "classify_twice_prime");
  if (!is_prime(p)) throw DomainError("classify_twice_prime: p is not prime");
  TwicePrimeVerdict verdict;
  verdict.p = p;
  const Nat candidate = two_p_plus_one(p);
  verdict.in_image = is_prime(candidate);
  if (verdict.in_image) {
    verdict.witness = candidate;
    verdict.safe_prime = candidate;
  }
  return verdict;
}

PreimageSet twice_prime_preimage(Nat p) {
  check_nat_range(p, "twice_prime_preimage");
  if (p < 5 || !is_prime(p))
    throw DomainError("twice_prime_preimage: p must be a prime >= 5");
  const Nat candidate = two_p_plus_one(p);
  if (!is_prime(candidate))
    throw DomainError("twice_prime_preimage: 2p+1 is composite");
  PreimageSet set;
  set.m = checked_mul(2, p);
  set.members = {candidate, checked_mul(2, candidate)};
  set.odd_members = {set.members[0]};
  set.even_members = {set.members[1]};
  return set;
}

TwicePrimeBound twice_prime_bound(Nat p) {
  check_nat_range(p, "twice_prime_bound");
  if (p % 2 == 0 || !is_prime(p))
    throw DomainError("twice_prime_bound: p must be an odd prime");
  if (!is_prime(two_p_plus_one(p)))
    throw DomainError("twice_prime_bound: 2p+1 is composite");
  TwicePrimeBound out;
  out.bound = checked_add(checked_mul(6, p), 3);
  out.phi_of_bound = checked_mul(4, p);
  return out;
}

std::vector<PowerTwoMultiple> power_two_multiples(Nat p, Nat k_max) {
  check_nat_range(p, "power_two_multiples");
  if (k_max < 1) throw DomainError("power_two_multiples: k_max must be >= 1");
  if (!is_prime(p)) throw DomainError("power_two_multiples: p is not prime");
  const Nat candidate = two_p_plus_one(p);
  if (!is_prime(candidate))
    throw DomainError("power_two_multiples: 2p+1 is composite");
  std::vector<PowerTwoMultiple> out;
  for (Nat k = 1; k <= k_max; ++k) {
    const Nat pow2 = checked_pow(2, k);
    out.push_back({k, checked_mul(pow2, candidate), checked_mul(pow2, p)});
  }
  return out;
}

std::vector<NontotientFamilyMember> nontotient_family(Nat p, Nat count) {
  check_nat_range(p, "nontotient_family");
  if (count < 1) throw DomainError("nontotient_family: count must be >= 1");
  if (p % 2 == 0 || !is_prime(p))
    throw DomainError("nontotient_family: p must be an odd prime");
  const Nat base = (p - 1) / 2;
  std::vector<NontotientFamilyMember> out;
  for (Nat k = 1; out.size() < count; ++k) {
    const Nat q = checked_add(base, checked_mul(k, p));
    if (!is_prime(q)) continue;
    // By construction 2q+1 = p(1+2k) with 1+2k >= 3, hence composite, so 2q
    // cannot be a totient value. Verify both facts anyway.
    const Nat blocked = two_p_plus_one(q);
    if (blocked % p != 0 || classify_twice_prime(q).in_image)
      throw std::logic_error("nontotient_family: construction violated");
    out.push_back({p, q, k});
  }
  return out;
}

std::vector<TwiceOddWitness> twice_odd_witnesses(Nat count) {
  if (count < 1) throw DomainError("twice_odd_witnesses: count must be >= 1");
  std::vector<TwiceOddWitness> out;
  for (Nat p = 3; out.size() < count; p = checked_add(p, 4))
    if (is_prime(p)) out.push_back({p, (p - 1) / 2});
  return out;
}

}  // namespace totient

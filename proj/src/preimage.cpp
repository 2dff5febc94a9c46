#include "totient/preimage.hpp"

#include <cstdint>

#include "totient/errors.hpp"
#include "totient/phi.hpp"

namespace totient {
namespace {

// Unsigned integer of arbitrary width, base 2^32, little-endian limbs. Just
// the two operations the exact bound floor needs: multiply by a word and
// floor-divide by a word. Prime-rich m push the intermediate products of
// A(m) = m * prod p/(p-1) far past 64 (even 128) bits, so the floor cannot
// be taken through fixed-width rationals.
class BigNat {
 public:
  explicit BigNat(Nat v) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    trim();
  }

  void mul(Nat f) {
    unsigned __int128 carry = 0;
    for (std::uint32_t& limb : limbs_) {
      const unsigned __int128 product =
          static_cast<unsigned __int128>(limb) * f + carry;
      limb = static_cast<std::uint32_t>(product);
      carry = product >> 32;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
    trim();
  }

  void floor_div(Nat d) {
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      const unsigned __int128 cur = (rem << 32) | limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim();
  }

  bool fits_nat() const {
    if (limbs_.size() > 2) return false;
    return to_raw() <= kNatMax;
  }

  Nat to_nat() const { return to_raw(); }

 private:
  Nat to_raw() const {
    Nat v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
  }

  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

// Ascending primes p with (p-1) | m; the factors of A(m). Always holds 2.
std::vector<Nat> contributing_primes(Nat m) {
  check_nat_range(m, "gupta_bound");
  if (m > 1 && m % 2 != 0)
    throw DomainError("gupta_bound: undefined for odd m > 1");
  std::vector<Nat> primes;
  for (Nat d : divisors(m)) {
    const Nat p = checked_add(d, 1);
    if (is_prime(p)) primes.push_back(p);
  }
  return primes;
}

// Exact floor(m * prod p/(p-1)): build the integer numerator in full width,
// then divide the denominator out one word at a time -- nested integer
// division keeps the floor exact.
Nat exact_floor(Nat m, const std::vector<Nat>& primes) {
  BigNat acc(m);
  for (Nat p : primes) acc.mul(p);
  for (Nat p : primes) acc.floor_div(p - 1);
  if (!acc.fits_nat())
    throw OverflowError("gupta_bound: floor exceeds 2^63-1");
  return acc.to_nat();
}

}  // namespace

Nat gupta_floor(Nat m) { return exact_floor(m, contributing_primes(m)); }

GuptaBound gupta_bound(Nat m) {
  GuptaBound out;
  out.m = m;
  out.contributing_primes = contributing_primes(m);
  out.floor = exact_floor(m, out.contributing_primes);
  try {
    Rational value = Rational::of(m);
    for (Nat p : out.contributing_primes) value = value.times(p, p - 1);
    out.value = value;
  } catch (const OverflowError&) {
    // The exact reduced fraction needs more than 64 bits; floor stays exact.
  }
  return out;
}

PreimageSet preimage(Nat m) {
  check_nat_range(m, "preimage");
  PreimageSet set;
  set.m = m;
  if (m == 1) {
    set.members = {1, 2};
  } else if (m % 2 == 0) {
    const Nat top = gupta_floor(m);
    for (Nat n = m + 1; n <= top; ++n)
      if (phi(n) == m) set.members.push_back(n);
  }
  // Odd m > 1 is never a totient value; members stays empty.
  for (Nat n : set.members)
    (n % 2 == 1 ? set.odd_members : set.even_members).push_back(n);
  return set;
}

ParityCounts parity_counts(Nat m) {
  const PreimageSet set = preimage(m);
  return ParityCounts{set.odd_members.size(), set.even_members.size()};
}

Rational odd_member_bound(Nat m) {
  const GuptaBound g = gupta_bound(m);
  if (!g.value)
    throw OverflowError("odd_member_bound: exact fraction exceeds 2^63-1");
  return g.value->half();
}

std::vector<BoundTableRow> bound_table() {
  std::vector<BoundTableRow> rows;
  for (Nat m : {1, 2, 4, 6, 8, 10, 12, 14}) {
    const GuptaBound g = gupta_bound(m);
    BoundTableRow row;
    row.m = m;
    row.bound = *g.value;
    if (row.bound.is_integer()) row.phi_of_bound = phi(row.bound.num);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace totient

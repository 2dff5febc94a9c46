#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "totient/arith.hpp"

namespace totient {

inline constexpr std::size_t kDefaultSieveBudget = 100'000'000;

// phi(n) for every n in [1, limit], built in one linear pass and immutable
// afterwards, so concurrent readers need no locking.
class TotientSieve {
 public:
  Nat limit() const noexcept { return limit_; }
  Nat phi(Nat n) const;  // 1 <= n <= limit

  // Indexed by n; [0] is unused and zero.
  std::span<const Nat> values() const noexcept { return values_; }

  // Binary dump: 4-byte magic, version byte, little-endian 64-bit limit,
  // then the limit values for n = 1..limit as little-endian 64-bit words.
  void save(const std::filesystem::path& path) const;
  static TotientSieve load(const std::filesystem::path& path,
                           std::size_t budget = kDefaultSieveBudget);

 private:
  friend TotientSieve build_sieve(Nat, std::size_t);
  TotientSieve() = default;

  Nat limit_ = 0;
  std::vector<Nat> values_;
};

// ResourceError when limit exceeds the entry budget.
TotientSieve build_sieve(Nat limit, std::size_t budget = kDefaultSieveBudget);

// Count and members of phi(n) = m among n <= sieve.limit(). valid means the
// count is provably complete: the bound A(m) fits inside the sieve (odd
// m > 1 never has solutions, so those counts are always complete).
struct MultiplicityReport {
  Nat m = 0;
  Nat count = 0;
  std::vector<Nat> members;
  bool valid = false;
};

MultiplicityReport multiplicity(Nat m, const TotientSieve& sieve);

// Exact max of floor(A(m)) over m = 1 and even m <= bound: the sieve limit
// that makes every multiplicity count up to bound complete.
Nat required_sieve_limit(Nat bound);

// Exact sieve limit needed by parity_balance_suite.
Nat parity_required_limit(Nat s_max);

// Every m <= bound with exactly one preimage (conjecturally none exist).
// InsufficientSieveError, naming the required limit, when the sieve is
// smaller than required_sieve_limit(bound).
std::vector<Nat> carmichael_scan(Nat bound, const TotientSieve& sieve);

// Smallest m in [2, bound] with exactly k preimages (k >= 2), if any.
// m = 1, whose preimage is the degenerate pair {1, 2}, is not searched.
std::optional<Nat> ford_search(Nat k, Nat bound, const TotientSieve& sieve);

// For odd s in [3, s_max], the preimage of 2s has as many odd members as
// even ones; returns every violation found (expected: none).
struct ParityViolation {
  Nat s = 0;
  Nat odd_count = 0;
  Nat even_count = 0;
};

std::vector<ParityViolation> parity_balance_suite(Nat s_max, const TotientSieve& sieve);

}  // namespace totient

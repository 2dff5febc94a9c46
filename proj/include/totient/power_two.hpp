#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "totient/arith.hpp"
#include "totient/rational.hpp"

namespace totient {

enum class FermatStatus { Prime, Composite, Unknown };

// Primality status of the Fermat numbers F_i = 2^(2^i) + 1, injected into
// every power-of-two computation so the conclusions stay conditional on the
// recorded statuses rather than on hardcoded beliefs.
//
// Defaults: Prime for i <= 4, Composite for 5 <= i <= 32, Unknown beyond.
// A file override replaces individual indices wholesale; lines look like
//     5 prime
// with statuses prime|composite|unknown, blank lines and # comments allowed.
class FermatStatusTable {
 public:
  FermatStatusTable() = default;
  static FermatStatusTable from_file(const std::filesystem::path& path);

  FermatStatus status(Nat index) const;

  // Stable identity of the override set; equal tables hash equally.
  std::string content_hash() const;

 private:
  std::map<Nat, FermatStatus> overrides_;
};

// Exact value of F_i; representable only for i <= 5.
Nat fermat_number(Nat index);

// Outcome of the odd-preimage question for 2^k. At most one odd n has
// phi(n) = 2^k; it exists exactly when every set bit i of k names a prime
// F_i, and then the witness is the product of those F_i.
struct OddPreimageResult {
  Nat k = 0;
  bool exists = false;
  std::optional<Nat> witness;         // the unique odd n, when it exists
  std::optional<Nat> blocking_index;  // least set bit with composite F_i
  bool undetermined = false;          // a needed status is Unknown
};

// k must satisfy 2^k <= kNatMax (k <= 62). When a composite status blocks,
// existence is decided even if other needed statuses are unknown.
OddPreimageResult odd_preimage_of_power_two(Nat k, const FermatStatusTable& table);

// 0, 1, or nullopt when the table cannot decide.
std::optional<Nat> odd_preimage_count(Nat k, const FermatStatusTable& table);

// A(2^k) = 2^(k+1) * prod F_i/(F_i - 1) over prime F_i with 2^i <= k.
// UndeterminedStatusError if a relevant status is Unknown.
Rational gupta_bound_power_two(Nat k, const FermatStatusTable& table);

}  // namespace totient

#include "totient/power_two.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "totient/errors.hpp"

namespace totient {
namespace {

// Bit index i of k asks about F_i; k <= 62 keeps 2^k inside the Nat range,
// so only indices 0..5 can ever come up.
void check_exponent(Nat k, const char* what) {
  if (k > 62) throw DomainError(std::string(what) + ": 2^k exceeds 2^63-1");
}

FermatStatus parse_status(const std::string& word, std::size_t line_no) {
  if (word == "prime") return FermatStatus::Prime;
  if (word == "composite") return FermatStatus::Composite;
  if (word == "unknown") return FermatStatus::Unknown;
  throw DomainError("status table line " + std::to_string(line_no) +
                    ": bad status \"" + word + "\"");
}

}  // namespace

FermatStatusTable FermatStatusTable::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open status table: " + path.string());
  FermatStatusTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Nat index = 0;
    std::string word;
    if (!(fields >> index)) {
      std::istringstream check(line);
      std::string stray;
      if (check >> stray)
        throw DomainError("status table line " + std::to_string(line_no) +
                          ": expected \"<index> <status>\"");
      continue;  // blank or comment-only line
    }
    if (!(fields >> word))
      throw DomainError("status table line " + std::to_string(line_no) +
                        ": missing status");
    std::string stray;
    if (fields >> stray)
      throw DomainError("status table line " + std::to_string(line_no) +
                        ": trailing content \"" + stray + "\"");
    table.overrides_[index] = parse_status(word, line_no);
  }
  return table;
}

FermatStatus FermatStatusTable::status(Nat index) const {
  const auto it = overrides_.find(index);
  if (it != overrides_.end()) return it->second;
  if (index <= 4) return FermatStatus::Prime;
  if (index <= 32) return FermatStatus::Composite;
  return FermatStatus::Unknown;
}

std::string FermatStatusTable::content_hash() const {
  // FNV-1a over the override set on top of a marker for the default rules.
  std::uint64_t h = 14695981039346656037ull;
  const auto absorb = [&h](std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  absorb(1, 1);  // default-rule version
  for (const auto& [index, status] : overrides_) {
    absorb(index, 8);
    absorb(static_cast<std::uint64_t>(status), 1);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Nat fermat_number(Nat index) {
  if (index >= 6) throw OverflowError("fermat_number: F_i exceeds 2^63-1 for i >= 6");
  return (Nat{1} << (Nat{1} << index)) + 1;
}

OddPreimageResult odd_preimage_of_power_two(Nat k, const FermatStatusTable& table) {
  check_exponent(k, "odd_preimage_of_power_two");
  OddPreimageResult result;
  result.k = k;
  bool unknown_seen = false;
  std::vector<Nat> prime_indices;
  for (Nat i = 0; i <= 62; ++i) {
    if ((k >> i & 1) == 0) continue;
    switch (table.status(i)) {
      case FermatStatus::Prime:
        prime_indices.push_back(i);
        break;
      case FermatStatus::Composite:
        // Least blocking index decides nonexistence outright.
        if (!result.blocking_index) result.blocking_index = i;
        break;
      case FermatStatus::Unknown:
        unknown_seen = true;
        break;
    }
  }
  if (result.blocking_index) {
    result.exists = false;
  } else if (unknown_seen) {
    result.undetermined = true;  // existence cannot be reported either way
  } else {
    result.exists = true;
    Nat witness = 1;
    for (Nat i : prime_indices) witness = checked_mul(witness, fermat_number(i));
    result.witness = witness;
  }
  return result;
}

std::optional<Nat> odd_preimage_count(Nat k, const FermatStatusTable& table) {
  const OddPreimageResult result = odd_preimage_of_power_two(k, table);
  if (result.undetermined) return std::nullopt;
  return result.exists ? Nat{1} : Nat{0};
}

Rational gupta_bound_power_two(Nat k, const FermatStatusTable& table) {
  check_exponent(k, "gupta_bound_power_two");
  Rational bound = Rational::of(checked_pow(2, checked_add(k, 1)));
  // F_i - 1 = 2^(2^i) divides 2^k exactly when 2^i <= k.
  for (Nat i = 0; (Nat{1} << i) <= k; ++i) {
    switch (table.status(i)) {
      case FermatStatus::Prime: {
        const Nat f = fermat_number(i);
        bound = bound.times(f, f - 1);
        break;
      }
      case FermatStatus::Composite:
        break;
      case FermatStatus::Unknown:
        throw UndeterminedStatusError(
            "gupta_bound_power_two: status of Fermat number " +
            std::to_string(i) + " is unknown");
    }
  }
  return bound;
}

}  // namespace totient

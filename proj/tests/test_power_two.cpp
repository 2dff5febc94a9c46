#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "totient/arith.hpp"
#include "totient/errors.hpp"
#include "totient/phi.hpp"
#include "totient/power_two.hpp"
#include "totient/preimage.hpp"
#include "totient/sieve.hpp"

using namespace totient;

namespace {

// Writes content to a unique temp file and cleans it up afterwards.
struct TempFile {
  explicit TempFile(const std::string& content) {
    path = std::filesystem::temp_directory_path() /
           ("fermat_table_test_" + std::to_string(counter++) + ".txt");
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::filesystem::path path;
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("fermat_number pinned values") {
  CHECK(fermat_number(0) == 3);
  CHECK(fermat_number(1) == 5);
  CHECK(fermat_number(2) == 17);
  CHECK(fermat_number(3) == 257);
  CHECK(fermat_number(4) == 65537);
  CHECK(fermat_number(5) == 4294967297ull);
  CHECK_THROWS_AS(fermat_number(6), OverflowError);
  for (Nat i = 0; i <= 4; ++i) CHECK(is_prime(fermat_number(i)));
  CHECK_FALSE(is_prime(fermat_number(5)));  // 641 * 6700417
}

TEST_CASE("default status table") {
  const FermatStatusTable table;
  for (Nat i = 0; i <= 4; ++i) CHECK(table.status(i) == FermatStatus::Prime);
  for (Nat i = 5; i <= 32; ++i) CHECK(table.status(i) == FermatStatus::Composite);
  CHECK(table.status(33) == FermatStatus::Unknown);
  CHECK(table.status(100) == FermatStatus::Unknown);
}

TEST_CASE("odd preimage of 2^k pinned results") {
  const FermatStatusTable table;
  const auto k0 = odd_preimage_of_power_two(0, table);
  CHECK(k0.exists);
  CHECK(k0.witness == 1);
  const auto k1 = odd_preimage_of_power_two(1, table);
  CHECK(k1.witness == 3);
  const auto k5 = odd_preimage_of_power_two(5, table);
  CHECK(k5.witness == 51);  // 3 * 17, phi = 2 * 16 = 32
  const auto k31 = odd_preimage_of_power_two(31, table);
  CHECK(k31.witness == 4294967295ull);  // product of all five prime F_i
  const auto k32 = odd_preimage_of_power_two(32, table);
  CHECK_FALSE(k32.exists);
  CHECK_FALSE(k32.undetermined);
  CHECK(k32.blocking_index == 5);
  CHECK_THROWS_AS(odd_preimage_of_power_two(63, table), DomainError);
}

TEST_CASE("any k with bit 5 set is blocked") {
  const FermatStatusTable table;
  for (Nat k : {32, 33, 40, 48, 62}) {
    const auto result = odd_preimage_of_power_two(k, table);
    CHECK_FALSE(result.exists);
    CHECK(result.blocking_index == 5);
    CHECK(odd_preimage_count(k, table) == Nat{0});
  }
}

TEST_CASE("witnesses are squarefree products of prime Fermat numbers") {
  const FermatStatusTable table;
  for (Nat k = 0; k <= 20; ++k) {
    const auto result = odd_preimage_of_power_two(k, table);
    REQUIRE(result.exists);
    CHECK(phi(*result.witness) == checked_pow(2, k));
    Nat reconstructed = 1;
    for (const auto& [p, e] : factorize(*result.witness)) {
      CHECK(e == 1);
      bool fermat_prime = false;
      for (Nat i = 0; i <= 4; ++i)
        if (fermat_number(i) == p) fermat_prime = true;
      CHECK(fermat_prime);
      reconstructed *= p;
    }
    CHECK(reconstructed == *result.witness);
  }
}

TEST_CASE("at most one odd solution, verified by sieve up to 2e6") {
  const FermatStatusTable table;
  const auto sieve = build_sieve(2'000'000);
  const auto values = sieve.values();
  for (Nat k = 0; k <= 20; ++k) {
    const Nat target = checked_pow(2, k);
    Nat count = 0, found = 0;
    for (Nat n = 1; n <= sieve.limit(); n += 2)
      if (values[n] == target) {
        ++count;
        found = n;
      }
    const auto result = odd_preimage_of_power_two(k, table);
    CHECK(count == *odd_preimage_count(k, table));
    if (count == 1) CHECK(found == *result.witness);
  }
}

TEST_CASE("odd count agrees with parity_counts for small k") {
  const FermatStatusTable table;
  for (Nat k = 0; k <= 8; ++k)
    CHECK(parity_counts(checked_pow(2, k)).odd == *odd_preimage_count(k, table));
}

TEST_CASE("gupta_bound_power_two pinned values and formula agreement") {
  const FermatStatusTable table;
  CHECK(gupta_bound_power_two(0, table) == Nat{2});
  CHECK(gupta_bound_power_two(5, table) == Rational{255, 2});
  CHECK(gupta_bound_power_two(30, table) == Nat{4294967295ull});
  for (Nat k = 0; k <= 16; ++k)
    CHECK(gupta_bound_power_two(k, table) == gupta_bound(checked_pow(2, k)).value);
}

TEST_CASE("status override files") {
  const FermatStatusTable table;

  TempFile claims_prime("5 prime\n# comment line\n\n40 prime\n");
  const auto optimistic = FermatStatusTable::from_file(claims_prime.path);
  CHECK(optimistic.status(5) == FermatStatus::Prime);
  CHECK(optimistic.status(40) == FermatStatus::Prime);
  CHECK(optimistic.status(4) == FermatStatus::Prime);      // default kept
  CHECK(optimistic.status(6) == FermatStatus::Composite);  // default kept
  const auto k32 = odd_preimage_of_power_two(32, optimistic);
  CHECK(k32.exists);
  CHECK(k32.witness == 4294967297ull);  // conditional on the claimed status

  TempFile claims_unknown("5 unknown\n");
  const auto agnostic = FermatStatusTable::from_file(claims_unknown.path);
  const auto undecided = odd_preimage_of_power_two(32, agnostic);
  CHECK(undecided.undetermined);
  CHECK_FALSE(undecided.blocking_index.has_value());
  CHECK_FALSE(odd_preimage_count(32, agnostic).has_value());
  CHECK_THROWS_AS(gupta_bound_power_two(32, agnostic), UndeterminedStatusError);

  // A composite bit decides nonexistence even next to an unknown one.
  TempFile mixed("2 composite\n5 unknown\n");
  const auto half_known = FermatStatusTable::from_file(mixed.path);
  const auto blocked = odd_preimage_of_power_two(36, half_known);  // bits 2 and 5
  CHECK_FALSE(blocked.exists);
  CHECK_FALSE(blocked.undetermined);
  CHECK(blocked.blocking_index == 2);
  CHECK(odd_preimage_count(36, half_known) == Nat{0});

  TempFile garbled("5 sometimes\n");
  CHECK_THROWS_AS(FermatStatusTable::from_file(garbled.path), DomainError);
  TempFile trailing("5 prime extra\n");
  CHECK_THROWS_AS(FermatStatusTable::from_file(trailing.path), DomainError);
  CHECK_THROWS_AS(FermatStatusTable::from_file("/nonexistent/table"), DomainError);
}

TEST_CASE("content hash tracks the override set") {
  const FermatStatusTable defaults;
  TempFile same_as_default_rules("");
  const auto empty_file = FermatStatusTable::from_file(same_as_default_rules.path);
  CHECK(defaults.content_hash() == empty_file.content_hash());
  TempFile with_override("5 prime\n");
  const auto overridden = FermatStatusTable::from_file(with_override.path);
  CHECK(defaults.content_hash() != overridden.content_hash());
  CHECK(overridden.content_hash().size() == 16);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "totient/arith.hpp"
#include "totient/errors.hpp"
#include "totient/phi.hpp"

using namespace totient;

TEST_CASE("phi pinned values") {
  CHECK(phi(1) == 1);
  CHECK(phi(2) == 1);
  CHECK(phi(3) == 2);
  CHECK(phi(4) == 2);
  CHECK(phi(12) == 4);
  CHECK(phi(42) == 12);
  CHECK(phi(81) == 54);
  CHECK(phi(1024) == 512);
  CHECK_THROWS_AS(phi(0), DomainError);
}

TEST_CASE("phi equals the gcd count for every n up to 5000") {
  for (Nat n = 1; n <= 5'000; ++n) CHECK(phi(n) == oracle::phi_gcd_count(n));
}

TEST_CASE("phi is multiplicative on coprime pairs up to 300") {
  for (Nat a = 1; a <= 300; ++a)
    for (Nat b = 1; b <= 300; ++b)
      if (gcd(a, b) == 1) CHECK(phi(a * b) == phi(a) * phi(b));
}

TEST_CASE("phi(n) < n for n >= 2, and even from 3 on") {
  CHECK(phi(1) == 1);
  for (Nat n = 2; n <= 20'000; ++n) {
    const Nat v = phi(n);
    CHECK(v < n);
    if (n >= 3) CHECK(v % 2 == 0);
  }
}

TEST_CASE("p - 1 divides phi(n) for every prime factor p of n") {
  for (Nat n = 2; n <= 5'000; ++n) {
    const Nat v = phi(n);
    for (const auto& [p, e] : factorize(n)) CHECK(v % (p - 1) == 0);
  }
}

TEST_CASE("phi_of_prime_power") {
  CHECK(phi_of_prime_power(2, 1) == 1);
  CHECK(phi_of_prime_power(3, 4) == 54);
  CHECK(phi_of_prime_power(7, 2) == 42);
  CHECK(phi_of_prime_power(2, 63) == Nat{1} << 62);
  CHECK_THROWS_AS(phi_of_prime_power(4, 2), DomainError);
  CHECK_THROWS_AS(phi_of_prime_power(3, 0), DomainError);
  CHECK_THROWS_AS(phi_of_prime_power(2, 64), OverflowError);
  for (Nat p : {2, 3, 5, 7, 11, 13})
    for (Nat a = 1; a <= 6; ++a)
      CHECK(phi_of_prime_power(p, a) == phi(checked_pow(p, a)));
}

TEST_CASE("phi_prime_multiple agrees with phi of the product") {
  CHECK(phi_prime_multiple(2, 7) == 6);
  CHECK(phi_prime_multiple(2, 6) == 4);
  CHECK(phi_prime_multiple(3, 9) == 18);
  CHECK_THROWS_AS(phi_prime_multiple(6, 5), DomainError);
  for (Nat p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                61, 67, 71, 73, 79, 83, 89, 97})
    for (Nat m = 1; m <= 1'000; ++m)
      CHECK(phi_prime_multiple(p, m) == phi(p * m));
}

TEST_CASE("phi_double agrees with phi(2m), equality exactly on odd m") {
  CHECK(phi_double(15) == 8);
  CHECK(phi_double(2) == 2);
  CHECK(phi_double(21) == 12);  // = phi(42); doubling an odd m leaves phi unchanged
  for (Nat m = 1; m <= 10'000; ++m) {
    const Nat doubled = phi_double(m);
    CHECK(doubled == phi(2 * m));
    CHECK((doubled == phi(m)) == (m % 2 == 1));
  }
}

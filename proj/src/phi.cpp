#include "totient/phi.hpp"

#include "totient/errors.hpp"

namespace totient {

Nat phi(Nat n) {
  check_nat_range(n, "phi");
  Nat result = 1;
  for (const auto& [p, e] : factorize(n))
    result = checked_mul(result, checked_mul(checked_pow(p, e - 1), p - 1));
  return result;
}

Nat phi_of_prime_power(Nat p, Nat alpha) {
  check_nat_range(p, "phi_of_prime_power");
  if (alpha < 1) throw DomainError("phi_of_prime_power: exponent must be >= 1");
  if (!is_prime(p)) throw DomainError("phi_of_prime_power: base is not prime");
  return checked_mul(checked_pow(p, alpha - 1), p - 1);
}

Nat phi_prime_multiple(Nat p, Nat m) {
  check_nat_range(p, "phi_prime_multiple");
  check_nat_range(m, "phi_prime_multiple");
  if (!is_prime(p)) throw DomainError("phi_prime_multiple: p is not prime");
  if (m % p == 0) return checked_mul(p, phi(m));
  return checked_mul(p - 1, phi(m));
}

Nat phi_double(Nat m) {
  check_nat_range(m, "phi_double");
  if (m % 2 == 1) return phi(m);
  return checked_mul(2, phi(m));
}

}  // namespace totient

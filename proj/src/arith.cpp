#include "totient/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "totient/errors.hpp"

namespace totient {
namespace {

using u128 = unsigned __int128;

// Full trial division below this bound; any cofactor surviving it exceeds
// 1e12 and goes to Pollard rho instead.
constexpr Nat kTrialBound = 1'000'000;

// The first twelve primes decide primality for every n < 3.3e24
// (Sorenson & Webster), which covers the whole Nat range.
constexpr std::array<Nat, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

Nat mulmod(Nat a, Nat b, Nat m) { return static_cast<Nat>(u128{a} * b % m); }

Nat powmod(Nat base, Nat exp, Nat m) {
  Nat r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// One strong-probable-prime round for odd n = d * 2^s + 1.
bool sprp_round(Nat n, Nat a, Nat d, int s) {
  Nat x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent-cycle Pollard rho; n must be odd, composite, with no factor below
// the trial bound. Deterministic: the polynomial offset starts at 1 and
// only moves on when a cycle degenerates.
Nat pollard_brent(Nat n) {
  for (Nat c = 1;; ++c) {
    auto step = [&](Nat v) {
      v = mulmod(v, v, n);
      v += c;
      if (v >= n) v -= n;
      return v;
    };
    Nat x = 2, y = 2, q = 1, g = 1, saved = 2;
    const Nat batch = 128;
    for (Nat r = 1; g == 1; r <<= 1) {
      x = y;
      for (Nat i = 0; i < r; ++i) y = step(y);
      for (Nat k = 0; k < r && g == 1; k += batch) {
        saved = y;
        const Nat stretch = std::min(batch, r - k);
        for (Nat i = 0; i < stretch; ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // The batch overshot; replay it one gcd at a time.
      g = 1;
      while (g == 1) {
        saved = step(saved);
        g = std::gcd(x > saved ? x - saved : saved - x, n);
      }
    }
    if (g != n) return g;
  }
}

// Factor a cofactor that survived trial division (no factor <= kTrialBound).
void split_with_rho(Nat n, std::map<Nat, Nat>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  const Nat d = pollard_brent(n);
  split_with_rho(d, acc);
  split_with_rho(n / d, acc);
}

}  // namespace

void check_nat_range(Nat n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": value must be >= 1");
  if (n > kNatMax) throw DomainError(std::string(what) + ": value exceeds 2^63-1");
}

Nat checked_add(Nat a, Nat b) {
  if (b > kNatMax || a > kNatMax - b) throw OverflowError("sum exceeds 2^63-1");
  return a + b;
}

Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > kNatMax / a) throw OverflowError("product exceeds 2^63-1");
  return a * b;
}

Nat checked_pow(Nat base, Nat exp) {
  Nat r = 1;
  for (Nat i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

Nat gcd(Nat a, Nat b) {
  check_nat_range(a, "gcd");
  check_nat_range(b, "gcd");
  return std::gcd(a, b);
}

bool is_prime(Nat n) {
  check_nat_range(n, "is_prime");
  if (n == 1) return false;
  for (Nat p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;  // no factor among the first twelve primes
  Nat d = n - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  for (Nat a : kWitnesses)
    if (!sprp_round(n, a, d, s)) return false;
  return true;
}

std::vector<PrimePower> factorize(Nat n) {
  check_nat_range(n, "factorize");
  std::vector<PrimePower> out;
  auto strip = [&](Nat p) {
    if (n % p != 0) return;
    Nat e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out.push_back({p, e});
  };
  strip(2);
  strip(3);
  Nat f = 5;
  while (f <= kTrialBound && u128{f} * f <= n) {
    strip(f);
    if (u128{f + 2} * (f + 2) <= n) strip(f + 2);
    f += 6;
  }
  if (n > 1) {
    if (u128{f} * f > n) {
      out.push_back({n, 1});  // trial division reached sqrt(n)
    } else {
      std::map<Nat, Nat> rest;
      split_with_rho(n, rest);
      for (const auto& [p, e] : rest) out.push_back({p, e});
    }
  }
  return out;
}

std::vector<Nat> divisors(Nat n) {
  check_nat_range(n, "divisors");
  std::vector<Nat> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    Nat pk = 1;
    for (Nat i = 0; i < e; ++i) {
      pk *= p;  // stays <= n
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace totient

#include "totient/sieve.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "totient/errors.hpp"
#include "totient/preimage.hpp"

namespace totient {
namespace {

constexpr char kMagic[4] = {'P', 'H', 'I', 'S'};
constexpr unsigned char kFormatVersion = 1;

void write_u64_le(std::ostream& out, Nat v) {
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

Nat read_u64_le(std::istream& in) {
  unsigned char bytes[8];
  in.read(reinterpret_cast<char*>(bytes), 8);
  if (!in) throw DomainError("sieve dump: truncated");
  Nat v = 0;
  for (int i = 0; i < 8; ++i) v |= Nat{bytes[i]} << (8 * i);
  return v;
}

// Simple prime bitmap over [0, top]; internal helper only.
std::vector<bool> prime_bitmap(Nat top) {
  std::vector<bool> prime(top + 1, true);
  prime[0] = false;
  if (top >= 1) prime[1] = false;
  for (Nat i = 2; i <= top / i; ++i)
    if (prime[i])
      for (Nat j = i * i; j <= top; j += i) prime[j] = false;
  return prime;
}

void check_fits(Nat bound, const TotientSieve& sieve) {
  const Nat required = required_sieve_limit(bound);
  if (sieve.limit() < required)
    throw InsufficientSieveError(required, sieve.limit());
}

}  // namespace

Nat TotientSieve::phi(Nat n) const {
  if (n < 1 || n > limit_)
    throw DomainError("sieve: n outside [1, limit]");
  return values_[n];
}

void TotientSieve::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write sieve dump: " + path.string());
  out.write(kMagic, 4);
  const char version = static_cast<char>(kFormatVersion);
  out.write(&version, 1);
  write_u64_le(out, limit_);
  for (Nat n = 1; n <= limit_; ++n) write_u64_le(out, values_[n]);
  out.flush();
  if (!out) throw Error("write failed: " + path.string());
}

TotientSieve TotientSieve::load(const std::filesystem::path& path, std::size_t budget) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open sieve dump: " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw DomainError("sieve dump: bad magic");
  char version;
  in.read(&version, 1);
  if (!in || static_cast<unsigned char>(version) != kFormatVersion)
    throw DomainError("sieve dump: unsupported version");
  const Nat limit = read_u64_le(in);
  if (limit < 1) throw DomainError("sieve dump: bad limit");
  if (limit > budget)
    throw ResourceError("sieve dump needs " + std::to_string(limit) +
                        " entries, budget is " + std::to_string(budget));
  TotientSieve sieve;
  sieve.limit_ = limit;
  sieve.values_.assign(limit + 1, 0);
  for (Nat n = 1; n <= limit; ++n) sieve.values_[n] = read_u64_le(in);
  if (sieve.values_[1] != 1) throw DomainError("sieve dump: corrupt content");
  return sieve;
}

TotientSieve build_sieve(Nat limit, std::size_t budget) {
  check_nat_range(limit, "build_sieve");
  if (limit > budget)
    throw ResourceError("sieve of " + std::to_string(limit) +
                        " entries exceeds budget " + std::to_string(budget));
  if (limit > 0xFFFFFFFFull)
    throw ResourceError("sieve limited to 2^32-1 entries");
  TotientSieve sieve;
  sieve.limit_ = limit;
  sieve.values_.assign(limit + 1, 0);
  sieve.values_[1] = 1;
  // Linear sieve: each n > 1 is crossed off exactly once, by its smallest
  // prime factor p, and phi(n) falls out of phi(n/p).
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(limit + 1, false);
  for (Nat i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      sieve.values_[i] = i - 1;
    }
    for (std::uint32_t p : primes) {
      const Nat ip = i * Nat{p};
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        sieve.values_[ip] = sieve.values_[i] * p;
        break;
      }
      sieve.values_[ip] = sieve.values_[i] * (p - 1);
    }
  }
  return sieve;
}

MultiplicityReport multiplicity(Nat m, const TotientSieve& sieve) {
  check_nat_range(m, "multiplicity");
  MultiplicityReport report;
  report.m = m;
  const auto values = sieve.values();
  for (Nat n = 1; n <= sieve.limit(); ++n)
    if (values[n] == m) report.members.push_back(n);
  report.count = report.members.size();
  if (m > 1 && m % 2 != 0)
    report.valid = true;  // odd m > 1 has no solutions anywhere
  else
    report.valid = gupta_floor(m) <= sieve.limit();
  return report;
}

Nat required_sieve_limit(Nat bound) {
  check_nat_range(bound, "required_sieve_limit");
  const Nat base = gupta_floor(1);  // covers m = 1
  if (bound < 2) return base;
  // Float pass to locate the maximum, exact integer pass to confirm it.
  // Each bound gathers well under 10^3 factors, so the accumulated relative
  // error stays far below the 1e-9 candidate slack.
  std::vector<double> ratio(bound + 1, 1.0);
  const std::vector<bool> prime = prime_bitmap(bound + 1);
  for (Nat p = 2; p <= bound + 1; ++p) {
    if (!prime[p]) continue;
    const Nat d = p - 1;
    const double factor = static_cast<double>(p) / static_cast<double>(d);
    for (Nat m = d; m <= bound; m += d) ratio[m] *= factor;
  }
  double max_approx = 0.0;
  for (Nat m = 2; m <= bound; m += 2)
    max_approx = std::max(max_approx, static_cast<double>(m) * ratio[m]);
  const double cutoff = max_approx * (1.0 - 1e-9);
  Nat best = base;
  for (Nat m = 2; m <= bound; m += 2) {
    if (static_cast<double>(m) * ratio[m] < cutoff) continue;
    best = std::max(best, gupta_floor(m));
  }
  return best;
}

Nat parity_required_limit(Nat s_max) {
  if (s_max < 3) return 1;
  Nat best = 1;
  for (Nat s = 3; s <= s_max; s += 2)
    best = std::max(best, gupta_floor(checked_mul(2, s)));
  return best;
}

std::vector<Nat> carmichael_scan(Nat bound, const TotientSieve& sieve) {
  check_nat_range(bound, "carmichael_scan");
  check_fits(bound, sieve);
  std::vector<Nat> counts(bound + 1, 0);
  const auto values = sieve.values();
  for (Nat n = 1; n <= sieve.limit(); ++n)
    if (values[n] <= bound) ++counts[values[n]];
  std::vector<Nat> lonely;
  for (Nat m = 1; m <= bound; ++m)
    if (counts[m] == 1) lonely.push_back(m);
  return lonely;
}

std::optional<Nat> ford_search(Nat k, Nat bound, const TotientSieve& sieve) {
  if (k < 2) throw DomainError("ford_search: k must be >= 2");
  check_nat_range(bound, "ford_search");
  check_fits(bound, sieve);
  std::vector<Nat> counts(bound + 1, 0);
  const auto values = sieve.values();
  for (Nat n = 1; n <= sieve.limit(); ++n)
    if (values[n] <= bound) ++counts[values[n]];
  // m = 1 is the degenerate case (preimage {1, 2}); the search starts at 2.
  for (Nat m = 2; m <= bound; ++m)
    if (counts[m] == k) return m;
  return std::nullopt;
}

std::vector<ParityViolation> parity_balance_suite(Nat s_max, const TotientSieve& sieve) {
  std::vector<ParityViolation> violations;
  if (s_max < 3) return violations;
  const Nat required = parity_required_limit(s_max);
  if (sieve.limit() < required)
    throw InsufficientSieveError(required, sieve.limit());
  std::vector<Nat> odd_counts(s_max + 1, 0);
  std::vector<Nat> even_counts(s_max + 1, 0);
  const auto values = sieve.values();
  const Nat top = checked_mul(2, s_max);
  for (Nat n = 1; n <= sieve.limit(); ++n) {
    const Nat v = values[n];
    // v = 2s with s odd >= 3 means v = 2 (mod 4) and v >= 6.
    if (v < 6 || v > top || (v & 3) != 2) continue;
    (n % 2 == 1 ? odd_counts : even_counts)[v / 2] += 1;
  }
  for (Nat s = 3; s <= s_max; s += 2)
    if (odd_counts[s] != even_counts[s])
      violations.push_back({s, odd_counts[s], even_counts[s]});
  return violations;
}

}  // namespace totient

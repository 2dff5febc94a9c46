#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace totient {

// Base class for all library failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A result or intermediate value would exceed 2^63-1. Never silent wraparound.
struct OverflowError : Error {
  using Error::Error;
};

// Argument outside an operation's domain: odd bound argument, composite
// where a prime is required, value outside [1, 2^63-1], bad file content.
struct DomainError : Error {
  using Error::Error;
};

// Memory budget or other resource limit exceeded.
struct ResourceError : Error {
  using Error::Error;
};

// A scan needs a larger sieve; carries the exact limit that would suffice.
class InsufficientSieveError : public DomainError {
 public:
  InsufficientSieveError(std::uint64_t required, std::uint64_t actual)
      : DomainError("sieve limit " + std::to_string(actual) +
                    " insufficient; need at least " + std::to_string(required)),
        required_(required) {}

  std::uint64_t required_limit() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

// A Fermat-number primality status needed for an exact answer is unknown.
struct UndeterminedStatusError : DomainError {
  using DomainError::DomainError;
};

}  // namespace totient

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace covnum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed cycle notation, generator file, certificate or solution text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Degree mismatch between permutations, or an argument outside its domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A shipped fixture disagrees with the catalog (wrong order, wrong class size).
class DataError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured element budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t requested,
                 std::uint64_t limit)
      : Error(what + ": " + std::to_string(requested) +
              " elements requested, budget is " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t requested_;
  std::uint64_t limit_;
};

/// Arithmetic that must be exact is not (e.g. s * |subgroup class| not
/// divisible by |element class|).
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace covnum

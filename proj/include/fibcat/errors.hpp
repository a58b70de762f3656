#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibcat {

// Base class for everything thrown on purpose by the library.
// The CLI maps ValidationError/Error to exit code 2 and CapExceeded to 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structured failure with a stable machine-readable kind, e.g.
// "MissingComposite", "NotFunctorial", "NotAFibration", "UnknownObject".
struct ValidationError : Error {
  std::string kind;
  ValidationError(std::string k, const std::string& detail)
      : Error(k + ": " + detail), kind(std::move(k)) {}
};

// Thrown when an enumeration walks past its step budget.
struct CapExceeded : Error {
  std::uint64_t limit;
  explicit CapExceeded(std::uint64_t lim)
      : Error("SizeCapExceeded: candidate step budget of " +
              std::to_string(lim) + " exhausted"),
        limit(lim) {}
};

// A state the constructions promise can never happen (e.g. a quotient
// composition that fails to be well defined). Reaching it is a bug.
struct InternalError : Error {
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

// Mutable step counter threaded through every enumerating operation.
struct StepBudget {
  std::uint64_t limit = kDefaultCap;
  std::uint64_t used = 0;

  void spend(std::uint64_t n = 1) {
    used += n;
    if (used > limit) throw CapExceeded(limit);
  }
};

}  // namespace fibcat

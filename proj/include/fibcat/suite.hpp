#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibcat/errors.hpp"

namespace fibcat {

// One bundled property suite (one acceptance criterion).
struct SuiteResult {
  int number = 0;
  std::string name;
  int cases = 0;      // individual checks run
  int failures = 0;
  std::string detail; // first failure, empty when green
  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::uint64_t cap = kDefaultCap;
};

// Criteria 1..15; runs them all (ids empty) or a subset.
std::vector<SuiteResult> run_suites(const std::vector<int>& ids,
                                    const SuiteOptions& opt);

// Named groups for the CLI: all, dfib, fib, twosided, profunctor,
// factorization.
std::vector<int> suite_group(const std::string& name);

}  // namespace fibcat

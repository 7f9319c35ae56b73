#pragma once

// Self-check suites run by `berezin verify`: every closed form in the library
// against its quadrature, Monte-Carlo or finite-difference counterpart.

#include <cstdint>
#include <string>
#include <vector>

namespace berezin {

struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Unknown names throw DomainError.
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace berezin

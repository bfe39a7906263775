#pragma once

// Seeded verification suites. Every case draws its data from its own
// generator seeded by (seed, suite, case), so results do not depend on the
// thread count or on which suites run together.

#include <cstdint>
#include <string>
#include <vector>

#include "maslov/io.hpp"

namespace maslov::suites {

struct SuiteResult {
  std::string name;
  std::string claim;
  int cases = 0;
  int passed = 0;
  std::vector<std::string> failures;  // "case k: detail", in case order
  bool pass() const noexcept { return cases > 0 && passed == cases; }
};

const std::vector<std::string>& suite_names();

/// Throws UnknownName for an unknown suite.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

/// `which` is a suite name or "all".
std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed);

io::Json to_json(const SuiteResult& r);

Rng case_rng(std::uint64_t seed, const std::string& suite, int index);

}  // namespace maslov::suites

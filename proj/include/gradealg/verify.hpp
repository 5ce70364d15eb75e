#ifndef GRADEALG_VERIFY_HPP
#define GRADEALG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gradealg {

// Named property suites, runnable from tests and from the CLI. Every suite
// is deterministic in the seed.
struct SuiteResult {
  std::string name;
  int cases = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace gradealg

#endif

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gdinv {

/// Options for one verification run. dim = 0 cycles n through 2..6
/// (2..5 for the inverse-axioms suite, which carries the Drazin solver
/// cross-check); a positive dim pins it. Trials are deterministic functions
/// of (suite, seed, trial index) only, so runs are bitwise reproducible and
/// the jobs count never changes the summary.
struct SuiteOptions {
  std::uint64_t trials{100};
  int dim{0};
  std::uint64_t seed{0};
  int jobs{1};
  long entry_bound{3};
  bool complex_entries{false};  // sample Gaussian-rational instead of real entries
};

struct SuiteResult {
  std::string suite;
  std::uint64_t trials{0};
  std::uint64_t failures{0};
  std::optional<std::uint64_t> first_failure_seed;
};

/// Suites: paper-examples, gd1-characterizations, 1gd-characterizations,
/// decomposition-formulas, orders, inverse-axioms.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

const std::vector<std::string>& suite_names();

}  // namespace gdinv

#pragma once

// Seeded property suites over every module, used by `uniqmod validate`.

#include <cstdint>
#include <string>
#include <vector>

namespace uniqmod {

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  /// Smallest observed slack of the checked inequality, relative where that makes
  /// sense; negative values are failures. 0 for exact equalities.
  double worst_margin = 0.0;
  std::string first_failure;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

/// Names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one suite ("schur", "interp", "bounds", "certify") or every suite ("all").
/// Throws std::invalid_argument for an unknown name.
std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace uniqmod

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wittpack/json_io.hpp"

namespace wittpack {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the acceptance criteria (exact arithmetic throughout, the random
/// sampling suites are driven by the seed). Criterion 8 (byte-identical
/// reports) is checked by rendering the whole report twice.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// The exhaustive gf/witt2/ec invariant suites on their own (the ring-check
/// command); identical to the structural acceptance criterion.
CriterionResult structural_suites(std::uint64_t seed);

/// Deterministic JSON report of a selftest run.
json selftest_report(std::uint64_t seed);

}  // namespace wittpack

// The machine-checked ledger for the example5 instance.
//
// Six checks run in order, each producing one re-verifiable ledger line:
// the reducer conjugation identity (with injectivity of the reducer
// words), survival of the sector generators inside their quasi-kernels,
// the full converse sweep ejecting every canonical element outside the
// sector-(0,0) span, the conjugation length formula on random pairs,
// closure sizes with canonical-form uniqueness, and a negative control
// that mutates the rewriting rules and expects the reducer identity to
// break.  The run aborts at the first failing check, whose detail carries
// the serialized counterexample.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hnn {

struct Example5SuiteConfig {
  std::size_t x_len = 4;             // reducer-identity length bound
  std::size_t quasi_tau_length = 4;  // survival search horizon
  std::size_t sweep_tau_length = 4;  // max accepted witness length
  std::size_t random_pairs = 1000;   // conjugation-length samples
  std::uint64_t seed = 12345;
};

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::vector<SuiteCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

SuiteResult verify_example5_suite(const Example5SuiteConfig& cfg = {});

// "[PASS] name: detail" / "[FAIL] name: detail", one line per check.
std::vector<std::string> suite_ledger(const SuiteResult& result);

}  // namespace hnn

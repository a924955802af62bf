#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyzeta {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint32_t max_weight = 5;
  unsigned digits = 20;
  std::uint64_t seed = 42;
  std::uint32_t trials = 20;
};

/// Exact word-algebra and transform identities.
std::vector<CheckResult> verify_algebra(const SuiteOptions& opts);
/// Numeric identities at the configured precision.
std::vector<CheckResult> verify_numeric(const SuiteOptions& opts);
/// Exact identities on the truncated group model.
std::vector<CheckResult> verify_group(const SuiteOptions& opts);

}  // namespace polyzeta

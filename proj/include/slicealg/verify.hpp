#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace slicealg {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0.0;      ///< observed error, residual or order
  double threshold = 0.0;  ///< bound the value is compared against
  bool at_least = false;   ///< pass when value >= threshold instead of <=
  bool pass = false;
};

/// Suites: quaternion, series, monogenic, pde, all. Throws ParseError on an unknown name.
std::vector<CheckResult> run_verification(std::string_view suite, std::uint64_t seed);

/// Fixed-width table, one row per check.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace slicealg

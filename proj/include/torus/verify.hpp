#pragma once

// Cross-checks between the closed forms, the Burnside engine and full
// orbit enumeration, plus the published reference tables.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "torus/numtheory.hpp"

namespace torus {

struct VerifyOptions {
  std::uint32_t max_n = 4;
  std::uint64_t max_cells = 16;
  unsigned jobs = 1;
  /// Expected alpha/beta values; entries here replace the built-in table.
  std::map<std::uint32_t, BigCount> alpha_override;
  std::map<std::uint32_t, BigCount> beta_override;
};

struct VerifyReport {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> first_failure;

  bool ok() const { return failed == 0; }
};

/// Runs every check within the size limits, printing one "<check> ok" or
/// "<check> FAIL: <detail>" line per check to `out`.
VerifyReport run_verification(const VerifyOptions& options, std::ostream& out);

}  // namespace torus

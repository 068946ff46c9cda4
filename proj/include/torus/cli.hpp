#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "torus/numtheory.hpp"

namespace torus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Terms of a named sequence: a-diagonal, b-diagonal, alpha, beta, or the
/// square arrays a and b read by antidiagonals. Throws
/// std::invalid_argument for an unknown name.
std::vector<BigCount> sequence_terms(std::string_view name, std::uint64_t count);

/// Parses "index value" lines. Blank lines and lines starting with '#'
/// are skipped.
std::map<std::uint64_t, BigCount> parse_bfile(std::istream& in);

}  // namespace torus::cli

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sogamma::cli {

enum ExitCode : int { kOk = 0, kMathFailure = 1, kUsage = 2, kIoError = 3 };

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kGammaMaxN = 5;
inline constexpr int kCensusMaxN = 12;

/// "A..B" with A <= B; std::nullopt otherwise.
std::optional<std::pair<int, int>> parse_range(const std::string& text);

/// Runs one command line (without argv[0]). All output goes to `out` and
/// `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sogamma::cli

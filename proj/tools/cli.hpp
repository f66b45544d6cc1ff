#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dilbasis::cli {

enum ExitCode { kOk = 0, kInconclusive = 1, kUsage = 2, kNumerical = 3 };

/// Parses argv and runs one subcommand. Results go to `out` (or the --out
/// file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  double zeta3 = 0.0;  // 0: library value; anything else replaces zeta(3) in the cubic checks
};

/// Fast checks: closed-form thresholds, p = 2 degeneracies, the d = 1
/// minimum-modulus formula against a dense grid.
std::vector<SelftestItem> selftest(const SelftestOptions& opts = {});

}  // namespace dilbasis::cli

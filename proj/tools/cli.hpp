#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zernike::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { ok = 0, domain_failure = 1, io_failure = 2 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form of a double, always with a '.' or an
/// exponent ("1.0", "1.7320508075688772", "1e-300").
std::string format_real(double v);

}  // namespace zernike::cli

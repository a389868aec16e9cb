#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bsk/presentation.hpp"

namespace bsk::cli {

/// Exit codes: success, check found violations, could not run.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Reads {"n": int, "A": [[...]], "B": [[...]]}; integer entries may also be
/// given as decimal strings. Throws ConfigError on malformed input.
GroupSpec load_spec_json(const std::string& text);
GroupSpec load_spec_file(const std::string& path);

/// Radius bound for group balls: BSK_MAX_BALL when set, else the default.
std::size_t max_ball_radius(const GroupSpec& spec);

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsk::cli

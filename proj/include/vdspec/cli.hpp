#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vdspec::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitTolerance = 3;

/// Entry point of the `vdspec` tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace vdspec::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace zdci::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kInputError = 2, kUnsupported = 3 };

// Runs one command line; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace zdci::cli

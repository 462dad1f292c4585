#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace rankrange::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kVerificationError = 2 };

/// Runs one command line (without the program name). Input documents come
/// from --input or, when absent or "-", from `in`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rankrange::cli

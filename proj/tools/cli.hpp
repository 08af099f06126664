#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burnside::cli {

enum ExitCode : int {
  ok = 0,
  verification_failed = 1,
  invalid_input = 2,
  cap_exceeded = 3,
};

/// Runs one command line. args[0] is the program name. Reads the spec from
/// `in` when the input path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace burnside::cli

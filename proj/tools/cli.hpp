#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbd::cli {

// Exit statuses shared by every subcommand.
enum ExitStatus : int {
  kOk = 0,
  kUsage = 1,  // bad command line, unreadable file
  kParse = 2,
  kValidation = 3,
  kComputation = 4,
};

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rbd::cli

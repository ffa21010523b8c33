#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bayesmosaic::cli {

enum ExitCode : int {
  kOk = 0,
  kIoOrParse = 1,
  kValidation = 2,
  kQuery = 3,  // unknown label or conditioning on a zero-probability outcome
};

// Environment variable naming a default style JSON file.
inline constexpr char kStyleEnv[] = "BAYESMOSAIC_STYLE";

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bayesmosaic::cli

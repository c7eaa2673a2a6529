#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aistress::cli {

enum ExitCode { kOk = 0, kConfig = 2, kNumeric = 3, kIo = 4 };

/// Runs one command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aistress::cli

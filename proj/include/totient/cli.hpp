#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace totient::cli {

// Runs one command (args exclude the program name) and writes results to
// out, diagnostics to err. Exit codes: 0 success, 2 usage error, 3 domain
// error, 4 resource/overflow error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace totient::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wst {

// Runs one CLI invocation (args exclude the program name). Reads the complex
// from --input or the given stream, writes reports to out and diagnostics to
// err. Exit codes: 0 success, 1 input error, 2 numerical failure, 3 failed
// certificate.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace wst

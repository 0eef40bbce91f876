#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singlat::cli {

enum ExitCode : int { ok = 0, input_error = 1, precondition_unmet = 2, internal_failure = 3 };

/// Run the command line (without the program name). Results go to out,
/// diagnostics to err; graphs given as "-" are read from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace singlat::cli

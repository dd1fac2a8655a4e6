#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdsirs::cli {

/// Parses and runs one command line (arguments without the program name).
/// Returns the process exit code: 0 on success, 2 when the input was
/// rejected (bad flags or a violated precondition), 1 on internal errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace sdsirs::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steinchar {

/// Runs the command line (args excludes the program name). Returns 0 when
/// every check passes, 1 when a check fails, 2 on usage or precondition
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steinchar

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace domekit::cli {

/// Runs the command line (without the program name). Returns 0 on success,
/// 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domekit::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tsg::cli {

/// Runs one `tsg` invocation. `args` excludes the program name.
///
/// Exit status: 0 on success, 1 when `verify` finds a failed item, 2 on usage
/// or input errors (unknown graph, malformed permutation, unreadable file).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsg::cli

#ifndef ZTOP_CLI_CORE_HPP
#define ZTOP_CLI_CORE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ztop {

// Runs one CLI invocation; returns the process exit code (0 success,
// 2 validation error, 3 bound error).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ztop

#endif

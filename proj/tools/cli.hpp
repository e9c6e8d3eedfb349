#ifndef KKTCO_TOOLS_CLI_HPP
#define KKTCO_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kktco::cli {

/// Runs one verb. args excludes the program name. Reports go to out,
/// diagnostics to err. Returns 0, 1 (a clause failed) or 2 (bad input).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kktco::cli

#endif  // KKTCO_TOOLS_CLI_HPP

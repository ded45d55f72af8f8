#ifndef RICCISOL_CLI_HPP
#define RICCISOL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace riccisol {

/// Exit codes: 0 all checks pass (recorded paper discrepancies are WARN,
/// not failure), 1 a check failed, 2 unknown id, 3 malformed spec file,
/// 4 parameter out of domain, 5 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

} // namespace riccisol

#endif

#ifndef POSBASIS_CLI_HPP
#define POSBASIS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace posbasis {

// Parses and runs one command line (argv without the program name).
// Exit codes: 0 success, 1 domain errors, 2 parse/usage errors,
// 3 formula/oracle mismatch from the oracle subcommands.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace posbasis

#endif

#ifndef LIEINV_CLI_HPP
#define LIEINV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lieinv::cli {

/// Process exit codes.
enum Exit : int {
    ok = 0,
    usage_or_parse = 1,  // bad flags, unreadable input, unknown names, invalid algebras
    non_invariant = 2,
    divergent = 3,
    count_mismatch = 4,
    not_closed = 5,
    dependent = 6,
    verify_failed = 7,
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieinv::cli

#endif  // LIEINV_CLI_HPP

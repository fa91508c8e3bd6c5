#ifndef CORNERWALK_CLI_HPP
#define CORNERWALK_CLI_HPP

#include <iosfwd>

namespace cornerwalk::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kSurprise = 2 };

/// Parses argv and runs one subcommand (enumerate, gf, bijection, verify,
/// scan). Exit status 0 when everything is confirmed, 1 on a usage error,
/// 2 when any report is a counterexample or a discrepancy.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cornerwalk::cli

#endif

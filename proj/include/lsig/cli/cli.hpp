#pragma once

#include <iosfwd>

namespace lsig::cli {

// Subcommands: keygen, aggregate, sign, verify, forklab, bench.
// Exit codes: 0 success / accept, 1 reject or malformed input to verify,
// 2 any other failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lsig::cli

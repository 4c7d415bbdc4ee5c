#pragma once

#include <iosfwd>

namespace l2tree {

/// Entry point of the `l2tree` tool. Exit codes: 0 success (including
/// inconclusive verdicts), 2 input errors, 3 oracle/criteria contradiction.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace l2tree

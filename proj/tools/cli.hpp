#pragma once

#include <iosfwd>

namespace qlab::cli {

/// Entry point of the qlab tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlab::cli

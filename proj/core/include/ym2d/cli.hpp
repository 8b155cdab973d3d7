#pragma once

#include <iosfwd>

namespace ym2d::cli {

/// Entry point of the command-line tool.  Returns the process exit code:
/// 0 success, 1 input error, 2 internal correctness alarm.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ym2d::cli

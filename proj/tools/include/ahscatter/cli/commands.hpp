#pragma once

#include <iosfwd>

namespace ahscatter::cli {

/// Exit codes: 0 success / all checks pass, 1 computational or domain error
/// (or a failing check), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ahscatter::cli

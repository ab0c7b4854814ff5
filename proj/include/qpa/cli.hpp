#pragma once

#include <ostream>

namespace qpa {

/// Runs the command line; returns 0 on success, 1 on a failed verification,
/// 2 on a usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpa

#pragma once

#include <iosfwd>

namespace lcklab {

/// Entry point of the lck-lab tool. Exit codes: 0 every requested check
/// passed, 1 a check failed (or a search found nothing), 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lcklab

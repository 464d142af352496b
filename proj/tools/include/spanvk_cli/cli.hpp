#pragma once

#include <ostream>

namespace spanvk::cli {

// exit codes: 0 pass, 1 check failed, 2 bad input or usage
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spanvk::cli

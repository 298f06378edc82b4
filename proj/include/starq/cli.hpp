#pragma once

#include <ostream>

namespace starq::cli {

// Exit codes: 0 success, 1 domain error (JSON error object on `out`),
// 2 usage error (message on `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace starq::cli

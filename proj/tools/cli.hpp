#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsym::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// min(hardware threads, QSYMKIT_THREADS) and at least 1.
int thread_cap();

}  // namespace qsym::cli

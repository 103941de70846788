#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colqsym {

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (program name excluded). Output is written
// only after the command has completed, so errors never leave partial
// output behind.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace colqsym

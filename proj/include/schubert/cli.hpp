#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schubert {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconclusive = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3; // positivity theorem violated or internal bug
inline constexpr int kExitIo = 4;

// Runs one command line (without the program name) and returns its exit
// code. Reads SCHUBERT_CACHE and SCHUBERT_JOBS from the environment.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schubert

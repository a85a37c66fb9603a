#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "checkers/board.hpp"

namespace checkers::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // verification or graph failure
inline constexpr int kUsage = 2;

// Runs one command line (without the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// "positions" format: a header line "n m d" with d as 1 or -1, then one line
// of space-separated 1-based source positions.
void write_positions(std::ostream& out, const Solution& sol);

// Throws std::invalid_argument on a malformed file.
Solution read_positions(std::istream& in);

}  // namespace checkers::cli

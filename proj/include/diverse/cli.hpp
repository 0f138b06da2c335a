#pragma once

#include <ostream>
#include <span>
#include <string>

namespace diverse::cli {

// Runs the command line (without the program name). Returns the exit
// status: 0 success, 1 usage, 2 parse/validation, 3 dimension, 4 I/O.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace diverse::cli

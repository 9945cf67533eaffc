#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace sqkit::cli {

/* Command-line front end. `args` excludes the program name. Returns the process
 * exit code: 0 success / definite verdict, 1 inconclusive or unequal or invalid,
 * 2 usage and data errors. Never throws. */
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sqkit::cli

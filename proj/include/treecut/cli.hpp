#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treecut {

// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_negative = 1,  // a decision came out "no"
    exit_input = 2,     // unreadable or invalid input, bad usage
    exit_budget = 3,    // enumeration budget or size limit hit
};

// args[0] is the program name. A graph path of "-" reads `in`.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace treecut

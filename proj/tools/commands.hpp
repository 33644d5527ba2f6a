#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hrush::cli {

// Exit statuses shared by every subcommand.
enum Exit : int {
    ok = 0,
    negative = 1,     // the question was answered with "no"
    bad_input = 2,    // unparsable file, unknown vertex, bad arguments
    precondition = 3, // well-formed input outside what the operation accepts
    internal = 4,
};

// Runs one hrushctl invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hrush::cli

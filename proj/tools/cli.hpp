#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diagsum {

// Full command-line front end; returns the process exit code.
// 0 = success / all checks pass, 1 = a checked claim failed,
// 2 = usage, parse, or resource-limit error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace diagsum

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maghom::cli {

// runs one command; 0 = verified/computed, 1 = a check failed, 2 = bad input
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maghom::cli

#pragma once

#include <string>
#include <vector>

namespace fdds::cli {

/// Entry point for the command-line driver. Returns the process exit code:
/// 0 success / true / solution, 1 false / no_solution, 2 usage or input
/// error.
int run(const std::vector<std::string>& args);

}  // namespace fdds::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kallen {

/// Exit codes: 0 ok, 1 verification failure, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kallen

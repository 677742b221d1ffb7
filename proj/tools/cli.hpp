#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nt::cli {

// 0 ok, 1 verification disagreement, 2 usage or domain error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nt::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vsl {

/// Exit codes: 0 success, 1 a verification found failures, 2 usage or input error.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace vsl

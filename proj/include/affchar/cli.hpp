#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affchar {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes: 0 success, 2 invalid input, 3 internal verification failure.
/// Reports go to out only on success; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affchar

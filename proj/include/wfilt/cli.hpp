#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfilt {

// Batch front end. Exit codes: 0 success/verified, 1 verdict failure,
// 2 parse or validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfilt

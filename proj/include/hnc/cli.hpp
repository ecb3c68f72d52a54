#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hnc::cli {

// Full command dispatch; argv without the program name. Result documents go
// to `out`, usage diagnostics to `err`. Returns the process exit status:
// 0 success, 1 domain error (error document on out), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hnc::cli

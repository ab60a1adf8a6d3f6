#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graft {
namespace cli {

// Full command-line surface; returns the process exit code:
//   0 success, 1 check failure, 2 input error, 3 cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace graft

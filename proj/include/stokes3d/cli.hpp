#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stokes3d {

// Full command dispatch.  Exit codes: 0 success, 1 verification or
// serialization failure, 2 input/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace stokes3d

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdim {

// Entry point behind the mdim binary. Returns 0 on success, 1 on domain
// errors (message on err), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdim

#pragma once

// Command-line front end, callable in-process for tests. `args` excludes the
// program name. Returns 0 on success, 1 on usage/domain errors, 2 when a
// verification check fails.

#include <ostream>
#include <string>
#include <vector>

namespace qhgrass {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qhgrass

#pragma once

#include <iosfwd>
#include <vector>

#include "defq/report.hpp"

namespace defq {

// Command-line front end as a library. argv excludes the program name.
// Exit codes: 0 all checks pass, 1 check failures (witnesses printed),
// 2 usage or parse errors.
int run_command(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err);

} // namespace defq

#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace gausslink::cli {

/// Exit codes: 0 success / all checks pass, 1 verification failure,
/// 2 usage error, 3 input parse error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gausslink::cli

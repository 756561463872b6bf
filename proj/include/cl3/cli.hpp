#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace cl3::cli {

// Entry point shared by the binary and the tests.  JSON goes to `out`,
// human-readable summaries to `err`.  Exit codes: 0 success / all checks
// pass, 1 numerical check failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cl3::cli

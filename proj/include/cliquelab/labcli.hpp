#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquelab {

// Full command-line entry point, callable in-process so tests can compare
// output bytes without spawning. args excludes the program name. Returns
// the process exit code: 0 success, 1 clean no-result (a first-hit search
// that found nothing), 2 usage or validation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cliquelab

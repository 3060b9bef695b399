#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace expresso::cli {

enum ExitCode : int {
  kOk = 0,
  kNotExpressible = 1,
  kInputError = 2,
  kResourceLimit = 3,
  kInconsistent = 4,
};

// Runs one command. args excludes the program name. EXPRESSO_LIMITS is read
// from `limits_env` (pass nullptr to ignore the environment).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* limits_env);

}  // namespace expresso::cli

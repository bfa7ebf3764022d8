#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mv/volumes.hpp"

namespace mvcli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kInfeasible = 3,
  kSelftestFailed = 4,
};

// Entry point shared by mvcalc and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// One "PASS"/"FAIL" line per check, then a summary line. Returns true if all passed.
bool selftest(const mv::EvalOptions& opts, std::ostream& out);

}  // namespace mvcli

#pragma once

#include <ostream>

namespace resq::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kDomainError = 3,
  kVerificationFailed = 4,
};

/// Entry point shared by the `resq` binary and the in-process CLI tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace resq::cli

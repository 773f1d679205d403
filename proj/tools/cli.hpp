#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bellperm/oracle.hpp"

namespace bellperm::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (args exclude the program name). `hooks` reach the
/// verify command only.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err,
        oracle::Hooks const& hooks = {});

}  // namespace bellperm::cli

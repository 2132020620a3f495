// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinbloch::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kConsistencyFailure = 2,
};

/// Runs one command line (args[0] is the program name). File arguments of "-"
/// read from `in`; documents go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spinbloch::cli

// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jalgo::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCompileError = 1,
  kRuntimeError = 2,
  kUsageError = 3,
  kIoError = 4,
};

inline constexpr int kDefaultPort = 8321;

/// Entry point behind the `jalgo` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jalgo::cli

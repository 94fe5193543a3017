// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jalgo {

enum class Phase { lexical, syntax, semantic };

std::string_view to_string(Phase phase);

/// A diagnostic produced by one of the three front-end passes. `code` has the
/// form E-LEX-n, E-SYN-n or E-SEM-n and never changes between releases.
struct CompileError {
  Phase phase = Phase::lexical;
  int line = 1;
  int column = 1;
  std::string message;
  std::string code;

  bool operator==(const CompileError&) const = default;
};

using Diagnostics = std::vector<CompileError>;

// "<file>:<line>:<col>: <phase>: <message> [<code>]"
std::string format_diagnostic(std::string_view file, const CompileError& error);

}  // namespace jalgo

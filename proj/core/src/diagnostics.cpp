// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/diagnostics.hpp"

namespace jalgo {

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::lexical:
      return "lexical";
    case Phase::syntax:
      return "syntax";
    case Phase::semantic:
      return "semantic";
  }
  return "unknown";
}

std::string format_diagnostic(std::string_view file, const CompileError& error) {
  std::string out;
  out.append(file);
  out += ':';
  out += std::to_string(error.line);
  out += ':';
  out += std::to_string(error.column);
  out += ": ";
  out.append(to_string(error.phase));
  out += ": ";
  out += error.message;
  out += " [";
  out += error.code;
  out += ']';
  return out;
}

}  // namespace jalgo

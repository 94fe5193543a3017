// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string_view>

#include "jalgo/analyzer.hpp"
#include "jalgo/ast.hpp"
#include "jalgo/diagnostics.hpp"

namespace jalgo {

struct CompiledProgram {
  Program program;
  SymbolTable symbols;
};

struct CompileResult {
  std::shared_ptr<const CompiledProgram> compiled;  // null iff errors nonempty
  Diagnostics errors;

  bool ok() const { return errors.empty(); }
};

/// Runs lexer, parser and analyzer in order. A pass only runs when the
/// previous one reported nothing, so `errors` all share one phase.
CompileResult compile(std::string_view source);

}  // namespace jalgo

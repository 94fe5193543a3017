// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>

#include "jalgo/ast.hpp"
#include "jalgo/diagnostics.hpp"
#include "jalgo/token.hpp"

namespace jalgo {

struct ParseResult {
  std::optional<Program> program;  // present iff errors is empty
  Diagnostics errors;

  bool ok() const { return errors.empty(); }
};

/// Maximum nesting of blocks and parenthesised expressions. Deeper input is
/// rejected with E-SYN-4 instead of exhausting the native stack.
inline constexpr int kMaxNestingDepth = 200;

/// Recursive descent over the jAlgo grammar. `tokens` must end with an eof
/// token. After a syntax error the parser resynchronises on the next
/// statement keyword so that several errors can be reported in one pass.
ParseResult parse(std::span<const Token> tokens);

}  // namespace jalgo

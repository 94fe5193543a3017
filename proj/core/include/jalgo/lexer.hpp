// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "jalgo/diagnostics.hpp"
#include "jalgo/token.hpp"

namespace jalgo {

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an eof token
  Diagnostics errors;

  bool ok() const { return errors.empty(); }
};

/// Splits source text into tokens. Lexing does not stop at the first bad
/// character; every lexical error in the input is reported.
///
/// CRLF line breaks are treated as LF. `#` starts a comment running to the end
/// of the line. Columns count characters, with a tab counting as one.
LexResult tokenize(std::string_view source);

}  // namespace jalgo

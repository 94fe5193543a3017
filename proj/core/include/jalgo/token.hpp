// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace jalgo {

enum class TokenKind {
  // keywords
  kw_function,
  kw_begin,
  kw_end,
  kw_if,
  kw_then,
  kw_else,
  kw_while,
  kw_do,
  kw_return,
  kw_and,
  kw_or,
  kw_not,
  kw_true,
  kw_false,
  kw_nil,
  kw_mod,

  ident,
  integer,

  // symbols
  assign,   // :=
  eq,       // =
  ne,       // <>
  lt,       // <
  le,       // <=
  gt,       // >
  ge,       // >=
  plus,
  minus,
  star,
  slash,
  lparen,
  rparen,
  comma,

  eof,
};

struct Token {
  TokenKind kind = TokenKind::eof;
  std::string text;
  int line = 1;
  int column = 1;

  bool operator==(const Token&) const = default;
};

/// Display name used in diagnostics, e.g. `'end'`, `identifier`, `end of file`.
std::string_view describe(TokenKind kind);

/// Canonical spelling for keywords and symbols; empty for ident/integer/eof.
std::string_view spelling(TokenKind kind);

std::optional<TokenKind> keyword_kind(std::string_view word);

bool is_keyword(TokenKind kind);

}  // namespace jalgo

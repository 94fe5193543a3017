// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/lexer.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

namespace jalgo {
namespace {

std::vector<TokenKind> kinds(const LexResult& r) {
  std::vector<TokenKind> out;
  for (const auto& t : r.tokens) out.push_back(t.kind);
  return out;
}

TEST(LexerTest, AssignmentTokensCarryPositions) {
  LexResult r = tokenize("x := 1");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.tokens.size(), 4u);
  EXPECT_EQ(r.tokens[0], (Token{TokenKind::ident, "x", 1, 1}));
  EXPECT_EQ(r.tokens[1], (Token{TokenKind::assign, ":=", 1, 3}));
  EXPECT_EQ(r.tokens[2], (Token{TokenKind::integer, "1", 1, 6}));
  EXPECT_EQ(r.tokens[3].kind, TokenKind::eof);
}

TEST(LexerTest, EmptyInputIsJustEof) {
  LexResult r = tokenize("");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.tokens.size(), 1u);
  EXPECT_EQ(r.tokens[0], (Token{TokenKind::eof, "", 1, 1}));
}

TEST(LexerTest, UnknownCharacterIsReportedAndLexingContinues) {
  LexResult r = tokenize("a @ b");
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].code, "E-LEX-1");
  EXPECT_EQ(r.errors[0].phase, Phase::lexical);
  EXPECT_EQ(r.errors[0].line, 1);
  EXPECT_EQ(r.errors[0].column, 3);
  EXPECT_EQ(kinds(r), (std::vector<TokenKind>{TokenKind::ident, TokenKind::ident, TokenKind::eof}));
}

TEST(LexerTest, CommentRunsToEndOfLine) {
  LexResult r = tokenize("x<=y # cmt");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(kinds(r), (std::vector<TokenKind>{TokenKind::ident, TokenKind::le, TokenKind::ident, TokenKind::eof}));
}

TEST(LexerTest, MaximalMunchOnTwoCharacterSymbols) {
  LexResult r = tokenize("<= <> >= := < > =");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(kinds(r), (std::vector<TokenKind>{TokenKind::le, TokenKind::ne, TokenKind::ge, TokenKind::assign,
                                              TokenKind::lt, TokenKind::gt, TokenKind::eq, TokenKind::eof}));
}

TEST(LexerTest, LoneColonIsAnError) {
  LexResult r = tokenize("a : b");
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].code, "E-LEX-2");
  EXPECT_EQ(r.errors[0].column, 3);
}

TEST(LexerTest, IntegerRangeIsSigned64Bit) {
  EXPECT_TRUE(tokenize("9223372036854775807").ok());
  LexResult r = tokenize("x 9223372036854775808");
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].code, "E-LEX-3");
  EXPECT_EQ(r.errors[0].column, 3);
}

TEST(LexerTest, KeywordsAreReservedAndCaseSensitive) {
  LexResult r = tokenize("begin Begin end_ mod");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(kinds(r), (std::vector<TokenKind>{TokenKind::kw_begin, TokenKind::ident, TokenKind::ident,
                                              TokenKind::kw_mod, TokenKind::eof}));
}

TEST(LexerTest, CrlfCountsAsOneLineBreak) {
  LexResult r = tokenize("a\r\nb\r\n  c");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.tokens[1].line, 2);
  EXPECT_EQ(r.tokens[1].column, 1);
  EXPECT_EQ(r.tokens[2].line, 3);
  EXPECT_EQ(r.tokens[2].column, 3);
}

TEST(LexerTest, TabIsOneColumn) {
  LexResult r = tokenize("\tx");
  EXPECT_EQ(r.tokens[0].column, 2);
}

TEST(LexerTest, MultibyteCharacterIsOneError) {
  LexResult r = tokenize("x \xC3\xA9 y");
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].column, 3);
  EXPECT_EQ(r.tokens[1].column, 5);
}

TEST(LexerTest, UnderscoreCannotStartIdentifier) {
  LexResult r = tokenize("_x");
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].code, "E-LEX-1");
}

// Random token soups: positions strictly increase, and re-lexing the lexemes
// joined by single spaces gives the same kinds and texts.
TEST(LexerTest, PositionsIncreaseAndRenderingRoundTrips) {
  static constexpr const char* kPieces[] = {"x",  "abc", "a_1", "0",  "42", ":=",    "=",    "<>",  "<",
                                            "<=", ">",   ">=",  "+",  "-",  "*",     "/",    "(",   ")",
                                            ",",  "if",  "end", "mod", " ", "\n",    "\t",   "# c\n", "\r\n"};
  std::mt19937_64 rng(7);
  for (int round = 0; round < 500; ++round) {
    std::string src;
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    for (int i = 0; i < n; ++i) {
      src += kPieces[std::uniform_int_distribution<std::size_t>(0, std::size(kPieces) - 1)(rng)];
      src += ' ';
    }
    LexResult r = tokenize(src);
    ASSERT_TRUE(r.ok()) << src;
    for (std::size_t i = 1; i < r.tokens.size(); ++i) {
      const auto& a = r.tokens[i - 1];
      const auto& b = r.tokens[i];
      EXPECT_TRUE(a.line < b.line || (a.line == b.line && a.column < b.column)) << src;
    }
    std::string rendered;
    for (const auto& t : r.tokens) rendered += t.text + " ";
    LexResult again = tokenize(rendered);
    ASSERT_TRUE(again.ok());
    ASSERT_EQ(again.tokens.size(), r.tokens.size());
    for (std::size_t i = 0; i < r.tokens.size(); ++i) {
      EXPECT_EQ(again.tokens[i].kind, r.tokens[i].kind);
      EXPECT_EQ(again.tokens[i].text, r.tokens[i].text);
    }
  }
}

}  // namespace
}  // namespace jalgo

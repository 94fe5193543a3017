// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/lexer.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <string>
#include <utility>

namespace jalgo {

namespace {

struct KeywordEntry {
  std::string_view word;
  TokenKind kind;
};

constexpr std::array<KeywordEntry, 16> kKeywords{{
    {"function", TokenKind::kw_function},
    {"begin", TokenKind::kw_begin},
    {"end", TokenKind::kw_end},
    {"if", TokenKind::kw_if},
    {"then", TokenKind::kw_then},
    {"else", TokenKind::kw_else},
    {"while", TokenKind::kw_while},
    {"do", TokenKind::kw_do},
    {"return", TokenKind::kw_return},
    {"and", TokenKind::kw_and},
    {"or", TokenKind::kw_or},
    {"not", TokenKind::kw_not},
    {"true", TokenKind::kw_true},
    {"false", TokenKind::kw_false},
    {"nil", TokenKind::kw_nil},
    {"mod", TokenKind::kw_mod},
}};

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }

// Length in bytes of the UTF-8 sequence introduced by `lead`; stray
// continuation bytes count as one.
std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  LexResult run() {
    while (!at_end()) {
      char c = peek();
      if (c == '\n') {
        advance_line();
      } else if (c == '\r' && peek(1) == '\n') {
        ++pos_;
        advance_line();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n' && !(peek() == '\r' && peek(1) == '\n')) advance_char();
      } else if (is_alpha(c)) {
        lex_word();
      } else if (is_digit(c)) {
        lex_number();
      } else {
        lex_symbol();
      }
    }
    result_.tokens.push_back(Token{TokenKind::eof, "", line_, column_});
    return std::move(result_);
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  void advance(std::size_t n = 1) {
    pos_ += n;
    column_ += static_cast<int>(n);
  }
  void advance_char() {
    std::size_t n = utf8_length(static_cast<unsigned char>(peek()));
    pos_ = std::min(pos_ + n, src_.size());
    ++column_;
  }
  void advance_line() {
    ++pos_;
    ++line_;
    column_ = 1;
  }

  void emit(TokenKind kind, std::size_t start, int line, int column) {
    result_.tokens.push_back(Token{kind, std::string(src_.substr(start, pos_ - start)), line, column});
  }

  void error(int line, int column, std::string message, std::string code) {
    result_.errors.push_back(CompileError{Phase::lexical, line, column, std::move(message), std::move(code)});
  }

  void lex_word() {
    std::size_t start = pos_;
    int column = column_;
    while (!at_end() && is_ident_char(peek())) advance();
    std::string_view word = src_.substr(start, pos_ - start);
    emit(keyword_kind(word).value_or(TokenKind::ident), start, line_, column);
  }

  void lex_number() {
    std::size_t start = pos_;
    int column = column_;
    while (!at_end() && is_digit(peek())) advance();
    std::string_view digits = src_.substr(start, pos_ - start);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range) {
      error(line_, column, "integer literal " + std::string(digits) + " does not fit in 64 bits", "E-LEX-3");
      return;
    }
    emit(TokenKind::integer, start, line_, column);
  }

  void lex_symbol() {
    std::size_t start = pos_;
    int column = column_;
    char c = peek();
    auto one = [&](TokenKind kind) {
      advance();
      emit(kind, start, line_, column);
    };
    auto two = [&](TokenKind kind) {
      advance(2);
      emit(kind, start, line_, column);
    };
    switch (c) {
      case ':':
        if (peek(1) == '=') {
          two(TokenKind::assign);
        } else {
          advance();
          error(line_, column, "expected '=' after ':'", "E-LEX-2");
        }
        return;
      case '=':
        return one(TokenKind::eq);
      case '<':
        if (peek(1) == '=') return two(TokenKind::le);
        if (peek(1) == '>') return two(TokenKind::ne);
        return one(TokenKind::lt);
      case '>':
        if (peek(1) == '=') return two(TokenKind::ge);
        return one(TokenKind::gt);
      case '+':
        return one(TokenKind::plus);
      case '-':
        return one(TokenKind::minus);
      case '*':
        return one(TokenKind::star);
      case '/':
        return one(TokenKind::slash);
      case '(':
        return one(TokenKind::lparen);
      case ')':
        return one(TokenKind::rparen);
      case ',':
        return one(TokenKind::comma);
      default:
        break;
    }
    advance_char();
    std::string shown(src_.substr(start, pos_ - start));
    error(line_, column, "unknown character '" + shown + "'", "E-LEX-1");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  LexResult result_;
};

}  // namespace

std::optional<TokenKind> keyword_kind(std::string_view word) {
  for (const auto& entry : kKeywords) {
    if (entry.word == word) return entry.kind;
  }
  return std::nullopt;
}

bool is_keyword(TokenKind kind) {
  return kind >= TokenKind::kw_function && kind <= TokenKind::kw_mod;
}

std::string_view spelling(TokenKind kind) {
  for (const auto& entry : kKeywords) {
    if (entry.kind == kind) return entry.word;
  }
  switch (kind) {
    case TokenKind::assign: return ":=";
    case TokenKind::eq: return "=";
    case TokenKind::ne: return "<>";
    case TokenKind::lt: return "<";
    case TokenKind::le: return "<=";
    case TokenKind::gt: return ">";
    case TokenKind::ge: return ">=";
    case TokenKind::plus: return "+";
    case TokenKind::minus: return "-";
    case TokenKind::star: return "*";
    case TokenKind::slash: return "/";
    case TokenKind::lparen: return "(";
    case TokenKind::rparen: return ")";
    case TokenKind::comma: return ",";
    default: return "";
  }
}

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::ident: return "identifier";
    case TokenKind::integer: return "integer";
    case TokenKind::eof: return "end of file";
    default: break;
  }
  // Quoted spellings live in a static table so the views stay valid.
  static const auto quoted = [] {
    std::array<std::string, static_cast<std::size_t>(TokenKind::eof) + 1> names;
    for (std::size_t i = 0; i < names.size(); ++i) {
      names[i] = "'" + std::string(spelling(static_cast<TokenKind>(i))) + "'";
    }
    return names;
  }();
  return quoted[static_cast<std::size_t>(kind)];
}

LexResult tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace jalgo

// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/parser.hpp"

#include <initializer_list>
#include <string>
#include <utility>

namespace jalgo {

namespace {

constexpr std::size_t kMaxErrors = 100;

// Thrown after a statement-level error has been recorded; caught by the
// enclosing statement list, which resynchronises.
struct SyntaxError {};
// A block ran into end of input or a top-level keyword before its `end`.
struct BlockCutOff {};
// Too many errors; give up.
struct TooManyErrors {};

std::string found_text(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::ident:
      return "identifier '" + tok.text + "'";
    case TokenKind::integer:
      return "integer " + tok.text;
    default:
      return std::string(describe(tok.kind));
  }
}

std::string expected_text(std::initializer_list<std::string_view> expected) {
  std::string out;
  std::size_t i = 0;
  for (auto item : expected) {
    if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
    out.append(item);
    ++i;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {}

  ParseResult run() {
    Program program;
    try {
      parse_program(program);
    } catch (const TooManyErrors&) {
    }
    ParseResult result;
    result.errors = std::move(errors_);
    if (result.errors.empty()) result.program = std::move(program);
    return result;
  }

 private:
  // --- token cursor --------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t ahead) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(TokenKind kind) const { return cur().kind == kind; }
  const Token& advance() {
    const Token& tok = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return tok;
  }
  bool accept(TokenKind kind) {
    if (!at(kind)) return false;
    advance();
    return true;
  }

  // --- diagnostics ---------------------------------------------------------

  void report(const Token& at_tok, std::string message, const char* code) {
    errors_.push_back(CompileError{Phase::syntax, at_tok.line, at_tok.column, std::move(message), code});
    if (errors_.size() >= kMaxErrors) throw TooManyErrors{};
  }

  [[noreturn]] void unexpected(std::initializer_list<std::string_view> expected) {
    report(cur(), "expected " + expected_text(expected) + " but found " + found_text(cur()), "E-SYN-1");
    throw SyntaxError{};
  }

  const Token& expect(TokenKind kind) {
    if (!at(kind)) unexpected({describe(kind)});
    return advance();
  }

  static bool is_sync_token(TokenKind kind) {
    switch (kind) {
      case TokenKind::kw_if:
      case TokenKind::kw_while:
      case TokenKind::kw_return:
      case TokenKind::kw_end:
      case TokenKind::kw_else:
      case TokenKind::kw_function:
      case TokenKind::kw_begin:
      case TokenKind::eof:
        return true;
      default:
        return false;
    }
  }

  void synchronize() {
    while (!is_sync_token(cur().kind)) advance();
  }

  static bool starts_statement(TokenKind kind) {
    return kind == TokenKind::ident || kind == TokenKind::kw_if || kind == TokenKind::kw_while ||
           kind == TokenKind::kw_return;
  }

  static bool starts_expression(TokenKind kind) {
    switch (kind) {
      case TokenKind::integer:
      case TokenKind::kw_true:
      case TokenKind::kw_false:
      case TokenKind::kw_nil:
      case TokenKind::ident:
      case TokenKind::lparen:
      case TokenKind::minus:
      case TokenKind::kw_not:
        return true;
      default:
        return false;
    }
  }

  class DepthGuard {
   public:
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxNestingDepth) {
        --p_.depth_;
        p_.report(p_.cur(), "nesting deeper than " + std::to_string(kMaxNestingDepth) + " levels", "E-SYN-4");
        throw SyntaxError{};
      }
    }
    ~DepthGuard() { --p_.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;

   private:
    Parser& p_;
  };

  // --- program structure ---------------------------------------------------

  void parse_program(Program& program) {
    for (;;) {
      if (at(TokenKind::kw_function)) {
        try {
          program.functions.push_back(parse_function());
        } catch (const SyntaxError&) {
          skip_to_top_level();
        } catch (const BlockCutOff&) {
          if (at(TokenKind::eof)) return;
        }
      } else if (at(TokenKind::kw_begin)) {
        break;
      } else if (at(TokenKind::eof)) {
        report(cur(), "expected 'function' or 'begin' but found end of file", "E-SYN-1");
        return;
      } else {
        report(cur(), "expected 'function' or 'begin' but found " + found_text(cur()), "E-SYN-1");
        advance();
        skip_to_top_level();
      }
    }

    const Token& begin = advance();
    try {
      parse_block(program.main, {TokenKind::kw_end}, "'begin'", begin);
    } catch (const BlockCutOff&) {
      return;
    }
    advance();  // end
    if (!at(TokenKind::eof)) {
      report(cur(), "expected end of file after the main block but found " + found_text(cur()), "E-SYN-1");
    }
  }

  void skip_to_top_level() {
    while (!at(TokenKind::kw_function) && !at(TokenKind::kw_begin) && !at(TokenKind::eof)) advance();
  }

  FunctionDef parse_function() {
    const Token& kw = advance();
    FunctionDef def;
    def.line = kw.line;
    def.column = kw.column;
    def.name = expect(TokenKind::ident).text;
    expect(TokenKind::lparen);
    if (at(TokenKind::ident)) {
      def.params.push_back(advance().text);
      while (accept(TokenKind::comma)) def.params.push_back(expect(TokenKind::ident).text);
    }
    if (!at(TokenKind::rparen)) {
      if (def.params.empty()) unexpected({"identifier", "')'"});
      unexpected({"','", "')'"});
    }
    advance();
    parse_block(def.body, {TokenKind::kw_end}, "function '" + def.name + "'", kw);
    advance();  // end
    return def;
  }

  // Parses statements until the cursor rests on one of `closers`, which is
  // left for the caller to consume. Reports E-SYN-3 and throws BlockCutOff
  // when input ends (or a top-level keyword appears) first.
  void parse_block(StmtList& out, std::initializer_list<TokenKind> closers, const std::string& what,
                   const Token& opener) {
    DepthGuard guard(*this);
    for (;;) {
      parse_statements(out);
      for (TokenKind closer : closers) {
        if (at(closer)) return;
      }
      if (at(TokenKind::eof) || at(TokenKind::kw_function) || at(TokenKind::kw_begin)) {
        report(cur(),
               "missing 'end' for " + what + " opened at line " + std::to_string(opener.line) + ", found " +
                   found_text(cur()),
               "E-SYN-3");
        throw BlockCutOff{};
      }
      std::string expected = "a statement";
      for (TokenKind closer : closers) expected += std::string(" or ") + std::string(describe(closer));
      report(cur(), "expected " + expected + " but found " + found_text(cur()), "E-SYN-1");
      advance();
      synchronize();
    }
  }

  void parse_statements(StmtList& out) {
    while (starts_statement(cur().kind)) {
      try {
        out.push_back(parse_statement());
      } catch (const SyntaxError&) {
        synchronize();
      }
    }
  }

  Stmt parse_statement() {
    const Token& first = cur();
    Stmt stmt;
    stmt.line = first.line;
    stmt.column = first.column;
    switch (first.kind) {
      case TokenKind::ident: {
        if (peek(1).kind == TokenKind::assign) {
          std::string target = advance().text;
          advance();
          stmt.node = AssignStmt{std::move(target), parse_expr()};
        } else if (peek(1).kind == TokenKind::lparen) {
          stmt.node = CallStmt{parse_call()};
        } else {
          advance();
          unexpected({"':='", "'('"});
        }
        break;
      }
      case TokenKind::kw_if: {
        const Token& kw = advance();
        IfStmt node{parse_expr(), {}, {}};
        expect(TokenKind::kw_then);
        parse_block(node.then_body, {TokenKind::kw_else, TokenKind::kw_end}, "'if'", kw);
        if (accept(TokenKind::kw_else)) {
          parse_block(node.else_body, {TokenKind::kw_end}, "'if'", kw);
        }
        advance();  // end
        stmt.node = std::move(node);
        break;
      }
      case TokenKind::kw_while: {
        const Token& kw = advance();
        WhileStmt node{parse_expr(), {}};
        expect(TokenKind::kw_do);
        parse_block(node.body, {TokenKind::kw_end}, "'while'", kw);
        advance();  // end
        stmt.node = std::move(node);
        break;
      }
      case TokenKind::kw_return: {
        advance();
        ReturnStmt node;
        if (starts_expression(cur().kind)) node.value = parse_expr();
        stmt.node = std::move(node);
        break;
      }
      default:
        unexpected({"a statement"});
    }
    return stmt;
  }

  // --- expressions ---------------------------------------------------------

  static Expr make(const Token& tok, decltype(Expr::node) node) {
    return Expr{std::move(node), tok.line, tok.column};
  }

  Expr parse_expr() {
    DepthGuard guard(*this);
    return parse_or();
  }

  Expr parse_or() {
    Expr lhs = parse_and();
    while (at(TokenKind::kw_or)) {
      const Token& op = advance();
      Expr rhs = parse_and();
      lhs = make(op, BinaryExpr{BinaryOp::logical_or, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr parse_and() {
    Expr lhs = parse_not();
    while (at(TokenKind::kw_and)) {
      const Token& op = advance();
      Expr rhs = parse_not();
      lhs = make(op, BinaryExpr{BinaryOp::logical_and, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr parse_not() {
    if (at(TokenKind::kw_not)) {
      const Token& op = advance();
      return make(op, UnaryExpr{UnaryOp::logical_not, parse_comparison()});
    }
    return parse_comparison();
  }

  static std::optional<BinaryOp> comparison_op(TokenKind kind) {
    switch (kind) {
      case TokenKind::eq: return BinaryOp::eq;
      case TokenKind::ne: return BinaryOp::ne;
      case TokenKind::lt: return BinaryOp::lt;
      case TokenKind::le: return BinaryOp::le;
      case TokenKind::gt: return BinaryOp::gt;
      case TokenKind::ge: return BinaryOp::ge;
      default: return std::nullopt;
    }
  }

  Expr parse_comparison() {
    Expr lhs = parse_additive();
    auto op = comparison_op(cur().kind);
    if (!op) return lhs;
    const Token& op_tok = advance();
    Expr rhs = parse_additive();
    if (comparison_op(cur().kind)) {
      report(cur(), "comparison operators cannot be chained; use 'and'", "E-SYN-2");
      throw SyntaxError{};
    }
    return make(op_tok, BinaryExpr{*op, std::move(lhs), std::move(rhs)});
  }

  Expr parse_additive() {
    Expr lhs = parse_multiplicative();
    while (at(TokenKind::plus) || at(TokenKind::minus)) {
      const Token& op = advance();
      Expr rhs = parse_multiplicative();
      BinaryOp bop = op.kind == TokenKind::plus ? BinaryOp::add : BinaryOp::sub;
      lhs = make(op, BinaryExpr{bop, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr parse_multiplicative() {
    Expr lhs = parse_unary();
    for (;;) {
      BinaryOp bop;
      if (at(TokenKind::star)) {
        bop = BinaryOp::mul;
      } else if (at(TokenKind::slash)) {
        bop = BinaryOp::div;
      } else if (at(TokenKind::kw_mod)) {
        bop = BinaryOp::mod;
      } else {
        return lhs;
      }
      const Token& op = advance();
      Expr rhs = parse_unary();
      lhs = make(op, BinaryExpr{bop, std::move(lhs), std::move(rhs)});
    }
  }

  Expr parse_unary() {
    if (at(TokenKind::minus)) {
      const Token& op = advance();
      return make(op, UnaryExpr{UnaryOp::negate, parse_primary()});
    }
    return parse_primary();
  }

  Expr parse_primary() {
    const Token& tok = cur();
    switch (tok.kind) {
      case TokenKind::integer: {
        advance();
        // The lexer guarantees the literal fits.
        return make(tok, IntLit{std::stoll(tok.text)});
      }
      case TokenKind::kw_true:
        advance();
        return make(tok, BoolLit{true});
      case TokenKind::kw_false:
        advance();
        return make(tok, BoolLit{false});
      case TokenKind::kw_nil:
        advance();
        return make(tok, NilLit{});
      case TokenKind::ident:
        if (peek(1).kind == TokenKind::lparen) return make(tok, parse_call());
        advance();
        return make(tok, VarRef{tok.text});
      case TokenKind::lparen: {
        advance();
        Expr inner = parse_expr();
        expect(TokenKind::rparen);
        return inner;
      }
      default:
        unexpected({"an expression"});
    }
  }

  CallExpr parse_call() {
    CallExpr call;
    call.name = advance().text;
    advance();  // (
    if (!at(TokenKind::rparen)) {
      call.args.push_back(parse_expr());
      while (accept(TokenKind::comma)) call.args.push_back(parse_expr());
    }
    if (!at(TokenKind::rparen)) unexpected({"','", "')'"});
    advance();
    return call;
  }

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  Diagnostics errors_;
};

}  // namespace

ParseResult parse(std::span<const Token> tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::eof) {
    ParseResult result;
    result.errors.push_back(CompileError{Phase::syntax, 1, 1, "token stream is not terminated", "E-SYN-1"});
    return result;
  }
  return Parser(tokens).run();
}

}  // namespace jalgo

// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/printer.hpp"

#include <string>
#include <type_traits>

namespace jalgo {

namespace {

// Binding strength, loosest first; mirrors the grammar's layering.
enum Prec : int { p_or = 1, p_and, p_not, p_cmp, p_add, p_mul, p_unary, p_primary };

int binary_prec(BinaryOp op) {
  switch (op) {
    case BinaryOp::logical_or: return p_or;
    case BinaryOp::logical_and: return p_and;
    case BinaryOp::add:
    case BinaryOp::sub: return p_add;
    case BinaryOp::mul:
    case BinaryOp::div:
    case BinaryOp::mod: return p_mul;
    default: return p_cmp;
  }
}

int precedence(const Expr& e) {
  if (const auto* b = std::get_if<BinaryExpr>(&e.node)) return binary_prec(b->op);
  if (const auto* u = std::get_if<UnaryExpr>(&e.node)) return u->op == UnaryOp::logical_not ? p_not : p_unary;
  return p_primary;
}

void emit_expr(std::string& out, const Expr& e, int min_prec);

void emit_args(std::string& out, const CallExpr& call) {
  out += call.name;
  out += '(';
  for (std::size_t i = 0; i < call.args.size(); ++i) {
    if (i > 0) out += ", ";
    emit_expr(out, call.args[i], p_or);
  }
  out += ')';
}

void emit_expr(std::string& out, const Expr& e, int min_prec) {
  const bool parens = precedence(e) < min_prec;
  if (parens) out += '(';
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          out += std::to_string(n.value);
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          out += n.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, NilLit>) {
          out += "nil";
        } else if constexpr (std::is_same_v<T, VarRef>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          emit_args(out, n);
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          if (n.op == UnaryOp::logical_not) {
            out += "not ";
            emit_expr(out, *n.operand, p_cmp);
          } else {
            out += '-';
            emit_expr(out, *n.operand, p_primary);
          }
        } else {
          const int prec = binary_prec(n.op);
          // Left-associative chains; comparisons take two additive operands.
          const int lhs_prec = prec == p_cmp ? p_add : prec;
          const int rhs_prec = prec == p_cmp ? p_add : prec + 1;
          emit_expr(out, *n.lhs, lhs_prec);
          out += ' ';
          out += spelling(n.op);
          out += ' ';
          emit_expr(out, *n.rhs, rhs_prec);
        }
      },
      e.node);
  if (parens) out += ')';
}

void indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(depth) * 2, ' '); }

void emit_block(std::string& out, const StmtList& stmts, int depth);

void emit_stmt(std::string& out, const Stmt& s, int depth) {
  indent(out, depth);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, AssignStmt>) {
          out += n.target + " := ";
          emit_expr(out, n.value, p_or);
          out += '\n';
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          out += "if ";
          emit_expr(out, n.condition, p_or);
          out += " then\n";
          emit_block(out, n.then_body, depth + 1);
          if (!n.else_body.empty()) {
            indent(out, depth);
            out += "else\n";
            emit_block(out, n.else_body, depth + 1);
          }
          indent(out, depth);
          out += "end\n";
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          out += "while ";
          emit_expr(out, n.condition, p_or);
          out += " do\n";
          emit_block(out, n.body, depth + 1);
          indent(out, depth);
          out += "end\n";
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          out += "return";
          if (n.value) {
            out += ' ';
            emit_expr(out, *n.value, p_or);
          }
          out += '\n';
        } else {
          emit_args(out, n.call);
          out += '\n';
        }
      },
      s.node);
}

void emit_block(std::string& out, const StmtList& stmts, int depth) {
  for (const auto& s : stmts) emit_stmt(out, s, depth);
}

}  // namespace

std::string format_expr(const Expr& expr) {
  std::string out;
  emit_expr(out, expr, p_or);
  return out;
}

std::string format_program(const Program& program) {
  std::string out;
  for (const auto& fn : program.functions) {
    out += "function " + fn.name + "(";
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      if (i > 0) out += ", ";
      out += fn.params[i];
    }
    out += ")\n";
    emit_block(out, fn.body, 1);
    out += "end\n\n";
  }
  out += "begin\n";
  emit_block(out, program.main, 1);
  out += "end\n";
  return out;
}

}  // namespace jalgo

// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/ast.hpp"

#include <algorithm>
#include <type_traits>

namespace jalgo {

std::string_view spelling(UnaryOp op) { return op == UnaryOp::logical_not ? "not" : "-"; }

std::string_view spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::logical_or: return "or";
    case BinaryOp::logical_and: return "and";
    case BinaryOp::eq: return "=";
    case BinaryOp::ne: return "<>";
    case BinaryOp::lt: return "<";
    case BinaryOp::le: return "<=";
    case BinaryOp::gt: return ">";
    case BinaryOp::ge: return ">=";
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::mul: return "*";
    case BinaryOp::div: return "/";
    case BinaryOp::mod: return "mod";
  }
  return "?";
}

bool is_comparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::eq:
    case BinaryOp::ne:
    case BinaryOp::lt:
    case BinaryOp::le:
    case BinaryOp::gt:
    case BinaryOp::ge:
      return true;
    default:
      return false;
  }
}

namespace {

bool same_args(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Expr& x, const Expr& y) { return structurally_equal(x, y); });
}

bool same_stmt(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, AssignStmt>) {
          return lhs.target == rhs.target && structurally_equal(lhs.value, rhs.value);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          return structurally_equal(lhs.condition, rhs.condition) &&
                 structurally_equal(lhs.then_body, rhs.then_body) &&
                 structurally_equal(lhs.else_body, rhs.else_body);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          return structurally_equal(lhs.condition, rhs.condition) &&
                 structurally_equal(lhs.body, rhs.body);
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          if (lhs.value.has_value() != rhs.value.has_value()) return false;
          return !lhs.value || structurally_equal(*lhs.value, *rhs.value);
        } else {
          return lhs.call.name == rhs.call.name && same_args(lhs.call.args, rhs.call.args);
        }
      },
      a.node);
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IntLit> || std::is_same_v<T, BoolLit>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, NilLit>) {
          return true;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          return lhs.name == rhs.name && same_args(lhs.args, rhs.args);
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          return lhs.op == rhs.op && structurally_equal(*lhs.operand, *rhs.operand);
        } else {
          return lhs.op == rhs.op && structurally_equal(*lhs.lhs, *rhs.lhs) &&
                 structurally_equal(*lhs.rhs, *rhs.rhs);
        }
      },
      a.node);
}

bool structurally_equal(const StmtList& a, const StmtList& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), same_stmt);
}

bool structurally_equal(const Program& a, const Program& b) {
  return std::equal(a.functions.begin(), a.functions.end(), b.functions.begin(), b.functions.end(),
                    [](const FunctionDef& x, const FunctionDef& y) {
                      return x.name == y.name && x.params == y.params &&
                             structurally_equal(x.body, y.body);
                    }) &&
         structurally_equal(a.main, b.main);
}

}  // namespace jalgo

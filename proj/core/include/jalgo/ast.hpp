// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace jalgo {

/// Owning pointer with value semantics, used to break recursion in the
/// expression variant.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

 private:
  std::unique_ptr<T> ptr_;
};

enum class UnaryOp { logical_not, negate };

enum class BinaryOp { logical_or, logical_and, eq, ne, lt, le, gt, ge, add, sub, mul, div, mod };

std::string_view spelling(UnaryOp op);
std::string_view spelling(BinaryOp op);
bool is_comparison(BinaryOp op);

struct Expr;

struct IntLit {
  std::int64_t value = 0;
};
struct BoolLit {
  bool value = false;
};
struct NilLit {};
struct VarRef {
  std::string name;
};
struct CallExpr {
  std::string name;
  std::vector<Expr> args;
};
struct UnaryExpr {
  UnaryOp op;
  Box<Expr> operand;
};
struct BinaryExpr {
  BinaryOp op;
  Box<Expr> lhs;
  Box<Expr> rhs;
};

struct Expr {
  std::variant<IntLit, BoolLit, NilLit, VarRef, CallExpr, UnaryExpr, BinaryExpr> node;
  int line = 1;
  int column = 1;
};

struct Stmt;
using StmtList = std::vector<Stmt>;

struct AssignStmt {
  std::string target;
  Expr value;
};
struct IfStmt {
  Expr condition;
  StmtList then_body;
  StmtList else_body;
};
struct WhileStmt {
  Expr condition;
  StmtList body;
};
struct ReturnStmt {
  std::optional<Expr> value;
};
struct CallStmt {
  CallExpr call;
};

struct Stmt {
  std::variant<AssignStmt, IfStmt, WhileStmt, ReturnStmt, CallStmt> node;
  int line = 1;  // line of the statement's first token
  int column = 1;
};

struct FunctionDef {
  std::string name;
  std::vector<std::string> params;
  StmtList body;
  int line = 1;
  int column = 1;
};

/// The abstract tree of a whole source file.
struct Program {
  std::vector<FunctionDef> functions;
  StmtList main;
};

/// Shape equality: compares everything except source positions.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const StmtList& a, const StmtList& b);
bool structurally_equal(const Program& a, const Program& b);

}  // namespace jalgo

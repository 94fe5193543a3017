// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/analyzer.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <type_traits>

namespace jalgo {

namespace {

constexpr std::array<BuiltinInfo, 10> kBuiltins{{
    {Builtin::new_node, "newNode", 1},
    {Builtin::value, "value", 1},
    {Builtin::set_value, "setValue", 2},
    {Builtin::left, "left", 1},
    {Builtin::right, "right", 1},
    {Builtin::set_left, "setLeft", 2},
    {Builtin::set_right, "setRight", 2},
    {Builtin::select, "select", 1},
    {Builtin::is_nil, "isNil", 1},
    {Builtin::print, "print", 1},
}};

std::string plural(int n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

class Analyzer {
 public:
  AnalysisResult run(const Program& program) {
    for (const auto& b : kBuiltins) {
      table_.functions.emplace(std::string(b.name), FunctionSymbol{std::string(b.name), b.arity, true, 0});
    }
    declare_functions(program);

    for (const auto& fn : program.functions) {
      // A rejected duplicate still gets its body checked, against its own scope.
      auto& vars = table_.function_variables[fn.name];
      for (const auto& p : fn.params) vars.insert(p);
      check_block(fn.body, vars, /*in_function=*/true);
    }
    check_block(program.main, table_.main_variables, /*in_function=*/false);

    std::stable_sort(errors_.begin(), errors_.end(), [](const CompileError& a, const CompileError& b) {
      return a.line != b.line ? a.line < b.line : a.column < b.column;
    });
    AnalysisResult result;
    result.errors = std::move(errors_);
    if (result.errors.empty()) result.table = std::move(table_);
    return result;
  }

 private:
  void error(int line, int column, std::string message, const char* code) {
    errors_.push_back(CompileError{Phase::semantic, line, column, std::move(message), code});
  }

  void declare_functions(const Program& program) {
    for (const auto& fn : program.functions) {
      if (find_builtin(fn.name)) {
        error(fn.line, fn.column, "function '" + fn.name + "' redefines a builtin", "E-SEM-6");
      } else if (auto it = table_.functions.find(fn.name); it != table_.functions.end()) {
        error(fn.line, fn.column,
              "function '" + fn.name + "' is already defined at line " + std::to_string(it->second.line),
              "E-SEM-3");
      } else {
        table_.functions.emplace(fn.name,
                                 FunctionSymbol{fn.name, static_cast<int>(fn.params.size()), false, fn.line});
      }
      for (std::size_t i = 0; i < fn.params.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (fn.params[i] == fn.params[j]) {
            error(fn.line, fn.column, "duplicate parameter '" + fn.params[i] + "' in function '" + fn.name + "'",
                  "E-SEM-4");
            break;
          }
        }
      }
    }
  }

  void check_call(const CallExpr& call, int line, int column) {
    const FunctionSymbol* fn = table_.find_function(call.name);
    if (fn == nullptr) {
      error(line, column, "unknown function '" + call.name + "'", "E-SEM-1");
    } else if (static_cast<int>(call.args.size()) != fn->arity) {
      error(line, column,
            "function '" + call.name + "' expects " + plural(fn->arity, "argument") + " but got " +
                std::to_string(call.args.size()),
            "E-SEM-2");
    }
    for (const auto& arg : call.args) check_expr(arg);
  }

  void check_expr(const Expr& e) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, CallExpr>) {
            check_call(n, e.line, e.column);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            check_expr(*n.operand);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            check_expr(*n.lhs);
            check_expr(*n.rhs);
          }
        },
        e.node);
  }

  template <typename VarSet>
  void check_block(const StmtList& stmts, VarSet& vars, bool in_function) {
    for (const auto& s : stmts) {
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, AssignStmt>) {
              if (table_.find_function(n.target) != nullptr) {
                error(s.line, s.column, "cannot assign to '" + n.target + "': it names a function", "E-SEM-7");
              }
              vars.insert(n.target);
              check_expr(n.value);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
              check_expr(n.condition);
              check_block(n.then_body, vars, in_function);
              check_block(n.else_body, vars, in_function);
            } else if constexpr (std::is_same_v<T, WhileStmt>) {
              check_expr(n.condition);
              check_block(n.body, vars, in_function);
            } else if constexpr (std::is_same_v<T, ReturnStmt>) {
              if (!in_function) error(s.line, s.column, "'return' outside of a function", "E-SEM-5");
              if (n.value) check_expr(*n.value);
            } else {
              check_call(n.call, s.line, s.column);
            }
          },
          s.node);
    }
  }

  SymbolTable table_;
  Diagnostics errors_;
};

}  // namespace

std::span<const BuiltinInfo> builtins() { return kBuiltins; }

std::optional<BuiltinInfo> find_builtin(std::string_view name) {
  for (const auto& b : kBuiltins) {
    if (b.name == name) return b;
  }
  return std::nullopt;
}

const FunctionSymbol* SymbolTable::find_function(std::string_view name) const {
  auto it = functions.find(name);
  return it == functions.end() ? nullptr : &it->second;
}

AnalysisResult analyze(const Program& program) { return Analyzer().run(program); }

}  // namespace jalgo

// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "jalgo/ast.hpp"
#include "jalgo/diagnostics.hpp"

namespace jalgo {

enum class Builtin {
  new_node,
  value,
  set_value,
  left,
  right,
  set_left,
  set_right,
  select,
  is_nil,
  print,
};

struct BuiltinInfo {
  Builtin id;
  std::string_view name;
  int arity;
};

/// The ten builtins in declaration order.
std::span<const BuiltinInfo> builtins();

std::optional<BuiltinInfo> find_builtin(std::string_view name);

struct FunctionSymbol {
  std::string name;
  int arity = 0;
  bool is_builtin = false;
  int line = 0;  // 0 for builtins
};

/// Declarations recovered from the abstract tree. Variables are declared by
/// assignment, so each scope holds every identifier assigned anywhere in it
/// plus, for functions, the parameters.
struct SymbolTable {
  std::map<std::string, FunctionSymbol, std::less<>> functions;
  std::set<std::string, std::less<>> main_variables;
  std::map<std::string, std::set<std::string, std::less<>>, std::less<>> function_variables;

  const FunctionSymbol* find_function(std::string_view name) const;
};

struct AnalysisResult {
  std::optional<SymbolTable> table;  // present iff errors is empty
  Diagnostics errors;

  bool ok() const { return errors.empty(); }
};

/// Semantic checks over a parsed program. All errors are collected.
AnalysisResult analyze(const Program& program);

}  // namespace jalgo

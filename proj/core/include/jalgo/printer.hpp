// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "jalgo/ast.hpp"

namespace jalgo {

/// Emits canonical source for a program: two-space indentation, one statement
/// per line, and only the parentheses the precedence rules require.
std::string format_program(const Program& program);

std::string format_expr(const Expr& expr);

}  // namespace jalgo

// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/value.hpp"

namespace jalgo {

std::string_view type_name(const Value& value) {
  if (value.is_int()) return "int";
  if (value.is_bool()) return "bool";
  if (value.is_node()) return "node";
  return "nil";
}

std::string to_display(const Value& value) {
  if (value.is_int()) return std::to_string(value.as_int());
  if (value.is_bool()) return value.as_bool() ? "true" : "false";
  if (value.is_node()) return "node#" + std::to_string(value.as_node().value);
  return "nil";
}

}  // namespace jalgo

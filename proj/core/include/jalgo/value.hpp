// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "jalgo/tree_store.hpp"

namespace jalgo {

struct Nil {
  bool operator==(const Nil&) const = default;
};

/// Dynamically typed runtime value.
class Value {
 public:
  Value() = default;
  Value(Nil) {}
  Value(std::int64_t v) : data_(v) {}
  Value(bool v) : data_(v) {}
  Value(NodeId v) : data_(v) {}

  bool is_nil() const { return std::holds_alternative<Nil>(data_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_bool() const { return std::holds_alternative<bool>(data_); }
  bool is_node() const { return std::holds_alternative<NodeId>(data_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  bool as_bool() const { return std::get<bool>(data_); }
  NodeId as_node() const { return std::get<NodeId>(data_); }

  bool operator==(const Value&) const = default;

 private:
  std::variant<Nil, std::int64_t, bool, NodeId> data_;
};

/// "int", "bool", "node" or "nil".
std::string_view type_name(const Value& value);

/// Text produced by print(): decimal ints, true/false, nil, node#<id>.
std::string to_display(const Value& value);

}  // namespace jalgo

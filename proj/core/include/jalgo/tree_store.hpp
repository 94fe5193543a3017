// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace jalgo {

struct NodeId {
  std::int64_t value = 0;

  auto operator<=>(const NodeId&) const = default;
};

enum class Side { left, right };

enum class TreeError {
  not_a_node,        // R-2
  already_attached,  // R-3
  cycle,             // R-4
};

std::string_view error_code(TreeError error);

struct SnapshotNode {
  NodeId id;
  std::int64_t value = 0;
  std::optional<NodeId> left;
  std::optional<NodeId> right;

  bool operator==(const SnapshotNode&) const = default;
};

/// Point-in-time copy of a store. Nodes and roots are in ascending id order.
struct ForestSnapshot {
  std::vector<SnapshotNode> nodes;
  std::vector<NodeId> roots;
  std::optional<NodeId> selected;

  bool operator==(const ForestSnapshot&) const = default;
};

/// Heap of binary-tree nodes that is always a forest: every node has at most
/// one parent and no node is its own ancestor. Ids are allocated densely from
/// 1 and never reused; nodes are never freed.
class NodeStore {
 public:
  NodeId alloc(std::int64_t value);

  /// Links `child` under `parent` on `side`, detaching whatever was there.
  /// A null child only detaches. On error the store is left untouched.
  /// Cycle detection takes precedence over the single-parent check. Setting
  /// a side to the child it already holds is a no-op.
  std::optional<TreeError> set_child(NodeId parent, Side side, std::optional<NodeId> child);

  bool contains(NodeId id) const;
  std::size_t size() const { return nodes_.size(); }
  NodeId next_id() const { return NodeId{static_cast<std::int64_t>(nodes_.size()) + 1}; }

  // Accessors below require contains(id).
  std::int64_t value(NodeId id) const;
  void set_value(NodeId id, std::int64_t value);
  std::optional<NodeId> child(NodeId id, Side side) const;
  std::optional<NodeId> parent(NodeId id) const;

  std::optional<NodeId> selected() const { return selected_; }
  /// Requires `id` to be empty or live.
  void select(std::optional<NodeId> id);

  /// Immutable copy of the current state. Consecutive calls with no mutation
  /// in between return the same shared object.
  std::shared_ptr<const ForestSnapshot> snapshot() const;

 private:
  struct Node {
    std::int64_t value = 0;
    std::optional<NodeId> left;
    std::optional<NodeId> right;
    std::optional<NodeId> parent;
  };

  Node& at(NodeId id);
  const Node& at(NodeId id) const;
  void touch() { cached_.reset(); }

  std::vector<Node> nodes_;
  std::optional<NodeId> selected_;
  mutable std::shared_ptr<const ForestSnapshot> cached_;
};

}  // namespace jalgo

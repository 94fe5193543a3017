// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/tree_store.hpp"

#include <cassert>

namespace jalgo {

std::string_view error_code(TreeError error) {
  switch (error) {
    case TreeError::not_a_node: return "R-2";
    case TreeError::already_attached: return "R-3";
    case TreeError::cycle: return "R-4";
  }
  return "R-?";
}

NodeStore::Node& NodeStore::at(NodeId id) {
  assert(contains(id));
  return nodes_[static_cast<std::size_t>(id.value - 1)];
}

const NodeStore::Node& NodeStore::at(NodeId id) const {
  assert(contains(id));
  return nodes_[static_cast<std::size_t>(id.value - 1)];
}

bool NodeStore::contains(NodeId id) const {
  return id.value >= 1 && static_cast<std::size_t>(id.value) <= nodes_.size();
}

NodeId NodeStore::alloc(std::int64_t value) {
  NodeId id = next_id();
  nodes_.push_back(Node{value, std::nullopt, std::nullopt, std::nullopt});
  touch();
  return id;
}

std::optional<TreeError> NodeStore::set_child(NodeId parent, Side side, std::optional<NodeId> child) {
  if (!contains(parent)) return TreeError::not_a_node;
  if (child) {
    if (!contains(*child)) return TreeError::not_a_node;
    // Relinking a child into the slot it already occupies changes nothing.
    if (this->child(parent, side) == child) return std::nullopt;
    // `parent` lies in the subtree of `child` iff walking up from `parent`
    // meets `child`.
    for (std::optional<NodeId> n = parent; n; n = at(*n).parent) {
      if (*n == *child) return TreeError::cycle;
    }
    if (at(*child).parent) return TreeError::already_attached;
  }

  Node& p = at(parent);
  std::optional<NodeId>& slot = side == Side::left ? p.left : p.right;
  if (slot) at(*slot).parent.reset();
  slot = child;
  if (child) at(*child).parent = parent;
  touch();
  return std::nullopt;
}

std::int64_t NodeStore::value(NodeId id) const { return at(id).value; }

void NodeStore::set_value(NodeId id, std::int64_t value) {
  at(id).value = value;
  touch();
}

std::optional<NodeId> NodeStore::child(NodeId id, Side side) const {
  const Node& n = at(id);
  return side == Side::left ? n.left : n.right;
}

std::optional<NodeId> NodeStore::parent(NodeId id) const { return at(id).parent; }

void NodeStore::select(std::optional<NodeId> id) {
  assert(!id || contains(*id));
  if (selected_ == id) return;
  selected_ = id;
  touch();
}

std::shared_ptr<const ForestSnapshot> NodeStore::snapshot() const {
  if (cached_) return cached_;
  auto snap = std::make_shared<ForestSnapshot>();
  snap->nodes.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    NodeId id{static_cast<std::int64_t>(i) + 1};
    snap->nodes.push_back(SnapshotNode{id, n.value, n.left, n.right});
    if (!n.parent) snap->roots.push_back(id);
  }
  snap->selected = selected_;
  cached_ = std::move(snap);
  return cached_;
}

}  // namespace jalgo

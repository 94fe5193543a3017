// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jalgo/analyzer.hpp"
#include "jalgo/ast.hpp"
#include "jalgo/tree_store.hpp"

namespace jalgo {

/// One animation step: the line about to execute and the forest as it is at
/// that instant. The terminal frame of a completed run has line 0.
struct Frame {
  std::size_t step = 0;
  int line = 0;
  std::shared_ptr<const ForestSnapshot> forest;

  const std::vector<NodeId>& roots() const { return forest->roots; }
  std::optional<NodeId> selected() const { return forest->selected; }
  const std::vector<SnapshotNode>& nodes() const { return forest->nodes; }

  bool operator==(const Frame& other) const {
    return step == other.step && line == other.line && *forest == *other.forest;
  }
};

enum class TraceStatus { completed, runtime_error, step_limit };

std::string_view to_string(TraceStatus status);

struct RuntimeError {
  std::string code;  // R-1 .. R-10
  std::string message;
  int line = 0;

  bool operator==(const RuntimeError&) const = default;
};

struct OutputEvent {
  std::size_t step = 0;
  std::string text;

  bool operator==(const OutputEvent&) const = default;
};

/// The recorded execution of one program. `error` is present iff the status
/// is runtime_error.
struct Trace {
  std::vector<Frame> frames;
  TraceStatus status = TraceStatus::completed;
  std::optional<RuntimeError> error;
  std::vector<OutputEvent> output;

  bool operator==(const Trace&) const = default;
};

struct RunLimits {
  std::size_t max_frames = 100000;
  std::size_t max_nodes = 10000;
  // Bounds user-function recursion; exceeding it is R-10.
  std::size_t max_call_depth = 1000;
};

using FrameObserver = std::function<void(const Frame&)>;

/// Runs an analysed program, emitting a frame before every statement and one
/// terminal frame after the main block. Each frame is recorded into the
/// returned trace and then handed to `observers` in order, before execution
/// continues.
Trace execute(const Program& program, const SymbolTable& symbols, const RunLimits& limits = {},
              std::span<const FrameObserver> observers = {});

}  // namespace jalgo

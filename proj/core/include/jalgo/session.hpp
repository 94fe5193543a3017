// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <set>

#include "jalgo/interpreter.hpp"

namespace jalgo {

enum class Direction { forward, back };

/// Index of the nearest frame strictly after (forward) or before (back)
/// `from` whose line is in `breakpoints`; the last frame or frame 0 when
/// there is none. `from` must address a frame of `trace`.
std::size_t next_break(const Trace& trace, std::size_t from, Direction direction,
                       const std::set<int>& breakpoints);

/// A cursor over a recorded trace. Navigation never re-executes the program;
/// stepping back is replay over the frames already recorded.
class Session {
 public:
  /// Throws std::invalid_argument when the trace has no frames.
  explicit Session(std::shared_ptr<const Trace> trace);

  std::size_t cursor() const { return cursor_; }
  std::size_t frame_count() const { return trace_->frames.size(); }
  const Frame& current() const { return trace_->frames[cursor_]; }
  const Trace& trace() const { return *trace_; }
  const std::set<int>& breakpoints() const { return breakpoints_; }

  /// Moves one frame, clamped to the ends.
  std::size_t step(Direction direction);

  /// Throws std::invalid_argument for line < 1.
  const std::set<int>& toggle_breakpoint(int line);

  std::size_t resume(Direction direction);

 private:
  std::shared_ptr<const Trace> trace_;
  std::size_t cursor_ = 0;
  std::set<int> breakpoints_;
};

}  // namespace jalgo

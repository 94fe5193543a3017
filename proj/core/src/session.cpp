// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/session.hpp"

#include <stdexcept>

namespace jalgo {

std::size_t next_break(const Trace& trace, std::size_t from, Direction direction,
                       const std::set<int>& breakpoints) {
  const auto& frames = trace.frames;
  if (direction == Direction::forward) {
    for (std::size_t i = from + 1; i < frames.size(); ++i) {
      if (breakpoints.contains(frames[i].line)) return i;
    }
    return frames.empty() ? 0 : frames.size() - 1;
  }
  for (std::size_t i = std::min(from, frames.size()); i-- > 0;) {
    if (breakpoints.contains(frames[i].line)) return i;
  }
  return 0;
}

Session::Session(std::shared_ptr<const Trace> trace) : trace_(std::move(trace)) {
  if (!trace_ || trace_->frames.empty()) throw std::invalid_argument("cannot open a session on an empty trace");
}

std::size_t Session::step(Direction direction) {
  if (direction == Direction::forward) {
    if (cursor_ + 1 < frame_count()) ++cursor_;
  } else if (cursor_ > 0) {
    --cursor_;
  }
  return cursor_;
}

const std::set<int>& Session::toggle_breakpoint(int line) {
  if (line < 1) throw std::invalid_argument("breakpoint line must be >= 1");
  if (!breakpoints_.erase(line)) breakpoints_.insert(line);
  return breakpoints_;
}

std::size_t Session::resume(Direction direction) {
  cursor_ = next_break(*trace_, cursor_, direction, breakpoints_);
  return cursor_;
}

}  // namespace jalgo

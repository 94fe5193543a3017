// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jalgo/session.hpp"

namespace jalgo::cli {

// Line-oriented terminal front end over a Session.
//
//   s        step forward          r     step back
//   b <n>    toggle breakpoint     c/cb  continue forward / back
//   p        print frame summary   q     quit
class Debugger {
 public:
  Debugger(std::string_view source, std::shared_ptr<const Trace> trace);

  /// Reads commands until `q` or end of input.
  void run(std::istream& in, std::ostream& out);

  /// Executes one command line; returns false on quit.
  bool execute(std::string_view command, std::ostream& out);

  const Session& session() const { return session_; }

 private:
  void show(std::ostream& out) const;
  void summary(std::ostream& out) const;

  std::vector<std::string> lines_;
  Session session_;
};

}  // namespace jalgo::cli

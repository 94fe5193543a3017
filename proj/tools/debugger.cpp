// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "debugger.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace jalgo::cli {

namespace {

constexpr std::string_view kUsage =
    "commands: s (step), r (step back), b <line> (toggle breakpoint), "
    "c (continue), cb (continue back), p (print frame), q (quit)";

std::vector<std::string> split_lines(std::string_view source) {
  std::vector<std::string> lines;
  std::string current;
  for (std::size_t i = 0; i < source.size(); ++i) {
    char c = source[i];
    if (c == '\n') {
      lines.push_back(std::move(current));
      current.clear();
    } else if (c == '\r' && i + 1 < source.size() && source[i + 1] == '\n') {
      continue;
    } else {
      current += c;
    }
  }
  lines.push_back(std::move(current));
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Debugger::Debugger(std::string_view source, std::shared_ptr<const Trace> trace)
    : lines_(split_lines(source)), session_(std::move(trace)) {}

void Debugger::show(std::ostream& out) const {
  const Frame& frame = session_.current();
  out << "[" << frame.step << "/" << session_.frame_count() - 1 << "] ";
  if (frame.line == 0) {
    out << "(end of program)\n";
    return;
  }
  const auto idx = static_cast<std::size_t>(frame.line - 1);
  out << "> " << frame.line << " | " << (idx < lines_.size() ? lines_[idx] : std::string{}) << "\n";
}

void Debugger::summary(std::ostream& out) const {
  const Frame& frame = session_.current();
  out << "step " << frame.step << " line " << frame.line << " roots [";
  for (std::size_t i = 0; i < frame.roots().size(); ++i) {
    out << (i ? ", " : "") << frame.roots()[i].value;
  }
  out << "] selected ";
  if (auto sel = frame.selected()) {
    out << sel->value;
  } else {
    out << "none";
  }
  out << "\n";
}

bool Debugger::execute(std::string_view command, std::ostream& out) {
  command = trim(command);
  if (command.empty()) return true;
  std::string_view verb = command.substr(0, command.find(' '));
  std::string_view arg = verb.size() < command.size() ? trim(command.substr(verb.size())) : std::string_view{};

  if (verb == "q" && arg.empty()) return false;
  if (verb == "s" && arg.empty()) {
    const std::size_t before = session_.cursor();
    if (session_.step(Direction::forward) == before) {
      out << "(end)\n";
    } else {
      show(out);
    }
  } else if (verb == "r" && arg.empty()) {
    const std::size_t before = session_.cursor();
    if (session_.step(Direction::back) == before) {
      out << "(start)\n";
    } else {
      show(out);
    }
  } else if ((verb == "c" || verb == "cb") && arg.empty()) {
    session_.resume(verb == "c" ? Direction::forward : Direction::back);
    show(out);
  } else if (verb == "p" && arg.empty()) {
    summary(out);
  } else if (verb == "b" && !arg.empty()) {
    int line = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), line);
    if (ec != std::errc{} || ptr != arg.data() + arg.size() || line < 1) {
      out << "breakpoint line must be a positive integer\n";
      return true;
    }
    const bool set = session_.toggle_breakpoint(line).contains(line);
    out << "breakpoint " << (set ? "set" : "cleared") << " at line " << line << "\n";
  } else {
    out << kUsage << "\n";
  }
  return true;
}

void Debugger::run(std::istream& in, std::ostream& out) {
  show(out);
  std::string line;
  for (;;) {
    out << "(jalgo) " << std::flush;
    if (!std::getline(in, line)) {
      out << "\n";
      return;
    }
    if (!execute(line, out)) return;
  }
}

}  // namespace jalgo::cli

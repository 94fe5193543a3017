// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/interpreter.hpp"

#include <gtest/gtest.h>

#include "jalgo/compiler.hpp"

namespace jalgo {
namespace {

Trace run(std::string_view src, RunLimits limits = {}, std::span<const FrameObserver> observers = {}) {
  CompileResult r = compile(src);
  EXPECT_TRUE(r.ok()) << src << ": " << (r.errors.empty() ? "" : r.errors[0].message);
  if (!r.ok()) return {};
  return execute(r.compiled->program, r.compiled->symbols, limits, observers);
}

std::vector<int> lines(const Trace& t) {
  std::vector<int> out;
  for (const auto& f : t.frames) out.push_back(f.line);
  return out;
}

std::vector<std::string> output(const Trace& t) {
  std::vector<std::string> out;
  for (const auto& e : t.output) out.push_back(e.text);
  return out;
}

void expect_error(std::string_view src, const char* code, int line) {
  Trace t = run(src);
  EXPECT_EQ(t.status, TraceStatus::runtime_error) << src;
  ASSERT_TRUE(t.error.has_value()) << src;
  EXPECT_EQ(t.error->code, code) << src << ": " << t.error->message;
  EXPECT_EQ(t.error->line, line) << src;
  ASSERT_FALSE(t.frames.empty());
  EXPECT_NE(t.frames.back().line, 0);
}

constexpr const char* kP1 = "begin\n r := newNode(5)\n setLeft(r, newNode(3))\n setRight(r, newNode(8))\nend";
constexpr const char* kP2 = "begin\n i := 0\n while i < 2 do\n  i := i + 1\n end\nend";

TEST(InterpreterTest, TreeBuildingFrames) {
  Trace t = run(kP1);
  EXPECT_EQ(t.status, TraceStatus::completed);
  EXPECT_EQ(lines(t), (std::vector<int>{2, 3, 4, 0}));
  const Frame& last = t.frames.back();
  ASSERT_EQ(last.nodes().size(), 3u);
  EXPECT_EQ(last.nodes()[0], (SnapshotNode{NodeId{1}, 5, NodeId{2}, NodeId{3}}));
  EXPECT_EQ(last.nodes()[1], (SnapshotNode{NodeId{2}, 3, std::nullopt, std::nullopt}));
  EXPECT_EQ(last.nodes()[2], (SnapshotNode{NodeId{3}, 8, std::nullopt, std::nullopt}));
  EXPECT_EQ(last.roots(), (std::vector<NodeId>{NodeId{1}}));
  EXPECT_EQ(last.selected(), NodeId{1});
  // Frames show the state before their statement runs.
  EXPECT_TRUE(t.frames[0].nodes().empty());
  EXPECT_EQ(t.frames[1].nodes().size(), 1u);
}

TEST(InterpreterTest, WhileEmitsFramePerConditionCheck) {
  EXPECT_EQ(lines(run(kP2)), (std::vector<int>{2, 3, 4, 3, 4, 3, 0}));
}

TEST(InterpreterTest, RecursionFramesAndOutput) {
  Trace t = run(
      "function fact(n)\n  if n <= 1 then\n    return 1\n  end\n  return n * fact(n - 1)\nend\n"
      "begin\n  x := fact(3)\n  print(x)\nend\n");
  EXPECT_EQ(lines(t), (std::vector<int>{8, 2, 5, 2, 5, 2, 3, 9, 0}));
  ASSERT_EQ(t.output.size(), 1u);
  EXPECT_EQ(t.output[0], (OutputEvent{7, "6"}));
}

TEST(InterpreterTest, EmptyMainHasOnlyTerminalFrame) {
  Trace t = run("begin end");
  ASSERT_EQ(t.frames.size(), 1u);
  EXPECT_EQ(t.frames[0].line, 0);
  EXPECT_EQ(t.frames[0].step, 0u);
  EXPECT_EQ(t.status, TraceStatus::completed);
  EXPECT_FALSE(t.error);
}

TEST(InterpreterTest, RuntimeErrorKeepsPartialTraceWithoutTerminalFrame) {
  Trace t = run("begin x := 1 / 0 end");
  EXPECT_EQ(t.status, TraceStatus::runtime_error);
  ASSERT_EQ(t.frames.size(), 1u);
  EXPECT_EQ(t.frames[0].line, 1);
  EXPECT_EQ(t.error->code, "R-6");
  EXPECT_EQ(t.error->line, 1);
}

TEST(InterpreterTest, IfElseEmitsOneFrameBeforeCondition) {
  EXPECT_EQ(lines(run("begin\nif 1 > 2 then\nx := 1\nelse\nx := 2\nend\nend")), (std::vector<int>{2, 5, 0}));
}

TEST(InterpreterTest, PrintFormats) {
  Trace t = run("begin\n print(-12)\n print(true)\n print(false)\n print(nil)\n print(newNode(1))\nend");
  EXPECT_EQ(output(t), (std::vector<std::string>{"-12", "true", "false", "nil", "node#1"}));
  EXPECT_EQ(t.output[1].step, 1u);
}

TEST(InterpreterTest, ArithmeticSemantics) {
  Trace t = run(
      "begin print(7 / 2) print(-7 / 2) print(7 mod 3) print(-7 mod 3) print(7 mod -3) print(2 + 3 * 4)"
      " print(-9223372036854775807 - 1) end");
  EXPECT_EQ(output(t), (std::vector<std::string>{"3", "-3", "1", "-1", "1", "14", "-9223372036854775808"}));
}

TEST(InterpreterTest, ShortCircuit) {
  // The right operands would fail if evaluated.
  Trace t = run("begin print(false and 1 / 0 = 0) print(true or undefined) end");
  EXPECT_EQ(t.status, TraceStatus::completed);
  EXPECT_EQ(output(t), (std::vector<std::string>{"false", "true"}));
}

TEST(InterpreterTest, EqualityOnNodesAndNil) {
  Trace t = run("begin a := newNode(1) b := newNode(1) print(a = a) print(a = b) print(a <> nil) print(nil = nil)"
                " print(left(a) = nil) end");
  EXPECT_EQ(output(t), (std::vector<std::string>{"true", "false", "true", "true", "true"}));
}

TEST(InterpreterTest, ImplicitSelection) {
  Trace t = run("begin\n a := newNode(1)\n b := newNode(2)\n x := value(a)\n select(nil)\n setValue(b, 4)\n"
                " y := left(a)\n select(b)\n z := isNil(a)\nend");
  std::vector<std::optional<NodeId>> selected;
  for (const auto& f : t.frames) selected.push_back(f.selected());
  const std::optional<NodeId> none;
  EXPECT_EQ(selected, (std::vector<std::optional<NodeId>>{none, NodeId{1}, NodeId{2}, NodeId{1}, none, NodeId{2},
                                                          NodeId{1}, NodeId{2}, NodeId{2}}));
}

TEST(InterpreterTest, FunctionsHaveOwnScopeAndReturnNilByDefault) {
  Trace t = run("function f(a) b := a end begin print(f(1)) end");
  EXPECT_EQ(output(t), (std::vector<std::string>{"nil"}));
  expect_error("function f() return x end\nbegin\nx := 1\ny := f()\nend", "R-1", 1);
}

TEST(InterpreterTest, CallByValue) {
  Trace t = run("function f(a) a := a + 1 return a end begin x := 1 y := f(x) print(x) print(y) end");
  EXPECT_EQ(output(t), (std::vector<std::string>{"1", "2"}));
}

TEST(InterpreterTest, ErrorLineIsTheExecutingStatementAfterCallReturns) {
  expect_error("function f()\n  return 0\nend\nbegin\n  x := 1 / f()\nend", "R-6", 5);
}

TEST(InterpreterTest, RuntimeErrorCodes) {
  expect_error("begin\n print(y)\nend", "R-1", 2);
  expect_error("begin\n x := value(nil)\nend", "R-2", 2);
  expect_error("begin\n a := newNode(1)\n b := newNode(2)\n c := newNode(3)\n setLeft(a, c)\n setLeft(b, c)\nend",
               "R-3", 6);
  expect_error("begin\n a := newNode(1)\n setRight(a, a)\nend", "R-4", 3);
  expect_error("begin\n x := 1 + true\nend", "R-5", 2);
  expect_error("begin\n if 1 then x := 1 end\nend", "R-5", 2);
  expect_error("begin\n x := newNode(true)\nend", "R-5", 2);
  expect_error("begin\n x := 1 = true\nend", "R-5", 2);
  expect_error("begin\n x := 5 mod 0\nend", "R-6", 2);
  expect_error("begin\n x := 9223372036854775807 + 1\nend", "R-9", 2);
  expect_error("begin\n x := -9223372036854775807 - 1\n y := x / -1\nend", "R-9", 3);
  expect_error("begin\n x := -9223372036854775807 - 1\n y := -x\nend", "R-9", 3);
  expect_error("begin\n x := 3037000500 * 3037000500\nend", "R-9", 2);
}

TEST(InterpreterTest, NodeLimit) {
  RunLimits limits;
  limits.max_nodes = 3;
  Trace t = run("begin\n i := 0\n while true do\n  n := newNode(i)\n  i := i + 1\n end\nend", limits);
  EXPECT_EQ(t.status, TraceStatus::runtime_error);
  EXPECT_EQ(t.error->code, "R-8");
  EXPECT_EQ(t.error->line, 4);
  EXPECT_EQ(t.frames.back().nodes().size(), 3u);
}

TEST(InterpreterTest, StepLimit) {
  RunLimits limits;
  limits.max_frames = 10;
  Trace t = run("begin while true do end end", limits);
  EXPECT_EQ(t.status, TraceStatus::step_limit);
  EXPECT_EQ(t.frames.size(), 10u);
  EXPECT_FALSE(t.error);
}

TEST(InterpreterTest, StepLimitOnTerminalFrame) {
  RunLimits limits;
  limits.max_frames = 2;
  EXPECT_EQ(run("begin x := 1 y := 2 end", limits).status, TraceStatus::step_limit);
  limits.max_frames = 3;
  EXPECT_EQ(run("begin x := 1 y := 2 end", limits).status, TraceStatus::completed);
}

TEST(InterpreterTest, CallDepthLimit) {
  RunLimits limits;
  limits.max_call_depth = 50;
  Trace t = run("function down(n)\n  return down(n + 1)\nend\nbegin\n  x := down(0)\nend", limits);
  EXPECT_EQ(t.status, TraceStatus::runtime_error);
  EXPECT_EQ(t.error->code, "R-10");
  EXPECT_EQ(t.error->line, 2);
}

TEST(InterpreterTest, DefaultLimitsSurviveDeepRecursion) {
  Trace t = run("function down(n)\n  return down(n + 1)\nend\nbegin\n  x := down(0)\nend");
  EXPECT_EQ(t.error->code, "R-10");
}

TEST(InterpreterTest, ObserversSeeEveryFrameInOrder) {
  std::vector<int> seen_a;
  std::vector<std::size_t> seen_b;
  std::vector<FrameObserver> observers{
      [&](const Frame& f) { seen_a.push_back(f.line); },
      [&](const Frame& f) {
        // Runs after the first observer for the same frame.
        EXPECT_EQ(seen_a.size(), seen_b.size() + 1);
        seen_b.push_back(f.step);
      },
  };
  Trace t = run(kP2, {}, observers);
  EXPECT_EQ(seen_a, lines(t));
  EXPECT_EQ(seen_b, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(InterpreterTest, BuiltinsReturnValues) {
  Trace t = run("begin\n r := newNode(5)\n setLeft(r, newNode(3))\n print(value(left(r)))\n print(right(r))\n"
                " print(isNil(right(r)))\n print(setValue(r, 1))\nend");
  EXPECT_EQ(output(t), (std::vector<std::string>{"3", "nil", "true", "nil"}));
}

TEST(InterpreterTest, Deterministic) {
  const char* src = "function f(n) if n > 0 then setLeft(newNode(n), f(n - 1)) end return newNode(n) end"
                    " begin x := f(4) end";
  EXPECT_EQ(run(src), run(src));
}

}  // namespace
}  // namespace jalgo

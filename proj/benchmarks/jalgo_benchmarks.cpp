// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "jalgo/compiler.hpp"
#include "jalgo/interpreter.hpp"
#include "jalgo/lexer.hpp"
#include "jalgo/parser.hpp"
#include "jalgo/tree_store.hpp"

namespace {

// Inserts `n` pseudo-random keys into a binary search tree.
std::string bst_program(int n) {
  std::string src =
      "function insert(root, v)\n"
      "  if isNil(root) then\n    return newNode(v)\n  end\n"
      "  if v < value(root) then\n    setLeft(root, insert(left(root), v))\n"
      "  else\n    setRight(root, insert(right(root), v))\n  end\n"
      "  return root\nend\n"
      "begin\n  t := nil\n  k := 7\n  i := 0\n"
      "  while i < " + std::to_string(n) + " do\n"
      "    k := (k * 1103 + 12345) mod 65536\n    t := insert(t, k)\n    i := i + 1\n  end\nend\n";
  return src;
}

void BM_Tokenize(benchmark::State& state) {
  const std::string src = bst_program(10);
  for (auto _ : state) benchmark::DoNotOptimize(jalgo::tokenize(src));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_Tokenize);

void BM_Parse(benchmark::State& state) {
  const auto tokens = jalgo::tokenize(bst_program(10)).tokens;
  for (auto _ : state) benchmark::DoNotOptimize(jalgo::parse(tokens));
}
BENCHMARK(BM_Parse);

void BM_Compile(benchmark::State& state) {
  const std::string src = bst_program(10);
  for (auto _ : state) benchmark::DoNotOptimize(jalgo::compile(src));
}
BENCHMARK(BM_Compile);

void BM_ExecuteBstInsert(benchmark::State& state) {
  const auto compiled = jalgo::compile(bst_program(static_cast<int>(state.range(0)))).compiled;
  std::size_t frames = 0;
  for (auto _ : state) {
    jalgo::Trace t = jalgo::execute(compiled->program, compiled->symbols);
    frames = t.frames.size();
    benchmark::DoNotOptimize(t);
  }
  state.counters["frames"] = static_cast<double>(frames);
}
BENCHMARK(BM_ExecuteBstInsert)->Arg(16)->Arg(64)->Arg(256);

void BM_SnapshotAfterMutation(benchmark::State& state) {
  jalgo::NodeStore store;
  std::mt19937_64 rng(1);
  for (int64_t i = 0; i < state.range(0); ++i) store.alloc(static_cast<std::int64_t>(rng() % 1000));
  for (auto _ : state) {
    store.set_value(jalgo::NodeId{1}, static_cast<std::int64_t>(rng() % 1000));
    benchmark::DoNotOptimize(store.snapshot());
  }
}
BENCHMARK(BM_SnapshotAfterMutation)->Arg(10)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();

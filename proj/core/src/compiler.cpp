// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/compiler.hpp"

#include "jalgo/lexer.hpp"
#include "jalgo/parser.hpp"

namespace jalgo {

CompileResult compile(std::string_view source) {
  CompileResult result;
  LexResult lexed = tokenize(source);
  if (!lexed.ok()) {
    result.errors = std::move(lexed.errors);
    return result;
  }
  ParseResult parsed = parse(lexed.tokens);
  if (!parsed.ok()) {
    result.errors = std::move(parsed.errors);
    return result;
  }
  AnalysisResult analysed = analyze(*parsed.program);
  if (!analysed.ok()) {
    result.errors = std::move(analysed.errors);
    return result;
  }
  result.compiled = std::make_shared<const CompiledProgram>(
      CompiledProgram{std::move(*parsed.program), std::move(*analysed.table)});
  return result;
}

}  // namespace jalgo

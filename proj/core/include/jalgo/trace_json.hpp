// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "jalgo/diagnostics.hpp"
#include "jalgo/interpreter.hpp"

// Canonical JSON shared by the CLI and the HTTP service: fixed key order, no
// insignificant whitespace. Equal values always encode to identical bytes.
namespace jalgo::json {

// {"step","line","roots","selected","nodes":[{"id","value","left","right"}]}
std::string encode_frame(const Frame& frame);

// {"frames":[...]} for frames[from, from + count) clamped to the trace end.
std::string encode_frame_page(const Trace& trace, std::size_t from, std::size_t count);

// {"frames","status","error","output"}
std::string encode_trace(const Trace& trace);

// null or {"code","message","line"}
std::string encode_runtime_error(const std::optional<RuntimeError>& error);

// [{"step","text"}...]
std::string encode_output(const Trace& trace);

// {"phase","code","line","column","message"}
std::string encode_compile_error(const CompileError& error);

// {"errors":[...]}
std::string encode_compile_errors(std::span<const CompileError> errors);

}  // namespace jalgo::json

// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/trace_json.hpp"

#include <algorithm>

#include "json.hpp"

namespace jalgo::json {

namespace {

using ordered = nlohmann::ordered_json;

ordered id_or_null(const std::optional<NodeId>& id) { return id ? ordered(id->value) : ordered(nullptr); }

ordered frame_json(const Frame& frame) {
  ordered roots = ordered::array();
  for (NodeId r : frame.roots()) roots.push_back(r.value);
  ordered nodes = ordered::array();
  for (const auto& n : frame.nodes()) {
    ordered node;
    node["id"] = n.id.value;
    node["value"] = n.value;
    node["left"] = id_or_null(n.left);
    node["right"] = id_or_null(n.right);
    nodes.push_back(std::move(node));
  }
  ordered j;
  j["step"] = frame.step;
  j["line"] = frame.line;
  j["roots"] = std::move(roots);
  j["selected"] = id_or_null(frame.selected());
  j["nodes"] = std::move(nodes);
  return j;
}

ordered error_json(const std::optional<RuntimeError>& error) {
  if (!error) return nullptr;
  ordered j;
  j["code"] = error->code;
  j["message"] = error->message;
  j["line"] = error->line;
  return j;
}

ordered output_json(const Trace& trace) {
  ordered out = ordered::array();
  for (const auto& ev : trace.output) {
    ordered e;
    e["step"] = ev.step;
    e["text"] = ev.text;
    out.push_back(std::move(e));
  }
  return out;
}

ordered compile_error_json(const CompileError& e) {
  ordered j;
  j["phase"] = std::string(to_string(e.phase));
  j["code"] = e.code;
  j["line"] = e.line;
  j["column"] = e.column;
  j["message"] = e.message;
  return j;
}

std::string dump(const ordered& j) { return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace); }

}  // namespace

std::string encode_frame(const Frame& frame) { return dump(frame_json(frame)); }

std::string encode_frame_page(const Trace& trace, std::size_t from, std::size_t count) {
  ordered frames = ordered::array();
  const std::size_t end = from + std::min(count, trace.frames.size() - std::min(from, trace.frames.size()));
  for (std::size_t i = from; i < end; ++i) frames.push_back(frame_json(trace.frames[i]));
  ordered j;
  j["frames"] = std::move(frames);
  return dump(j);
}

std::string encode_trace(const Trace& trace) {
  ordered frames = ordered::array();
  for (const auto& f : trace.frames) frames.push_back(frame_json(f));
  ordered j;
  j["frames"] = std::move(frames);
  j["status"] = std::string(to_string(trace.status));
  j["error"] = error_json(trace.error);
  j["output"] = output_json(trace);
  return dump(j);
}

std::string encode_runtime_error(const std::optional<RuntimeError>& error) { return dump(error_json(error)); }

std::string encode_output(const Trace& trace) { return dump(output_json(trace)); }

std::string encode_compile_error(const CompileError& error) { return dump(compile_error_json(error)); }

std::string encode_compile_errors(std::span<const CompileError> errors) {
  ordered list = ordered::array();
  for (const auto& e : errors) list.push_back(compile_error_json(e));
  ordered j;
  j["errors"] = std::move(list);
  return dump(j);
}

}  // namespace jalgo::json

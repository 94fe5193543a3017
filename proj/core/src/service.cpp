// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/service.hpp"

#include <charconv>
#include <limits>
#include <set>

#include "jalgo/compiler.hpp"
#include "jalgo/session.hpp"
#include "jalgo/trace_json.hpp"
#include "json.hpp"

namespace jalgo {

namespace {

using ordered = nlohmann::ordered_json;

constexpr std::size_t kMaxFramesCap = 1'000'000;
constexpr std::size_t kMaxNodesCap = 1'000'000;
constexpr std::size_t kMaxPage = 1000;
constexpr std::string_view kPrefix = "/api/programs";

HttpResponse error_response(int status, std::string message) {
  ordered j;
  j["error"] = std::move(message);
  return HttpResponse{status, j.dump()};
}

// Strict non-negative decimal; rejects signs, blanks and trailing junk.
std::optional<std::size_t> parse_index(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<std::size_t> query_index(const std::map<std::string, std::string>& query, const std::string& key,
                                       std::size_t fallback, bool& bad) {
  auto it = query.find(key);
  if (it == query.end()) return fallback;
  auto v = parse_index(it->second);
  if (!v) bad = true;
  return v;
}

std::optional<std::size_t> limit_field(const ordered& body, const char* key, std::size_t fallback,
                                       std::size_t cap, std::string& problem) {
  if (!body.contains(key) || body[key].is_null()) return fallback;
  const auto& v = body[key];
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1 || static_cast<std::size_t>(v.get<std::int64_t>()) > cap) {
    problem = std::string("\"") + key + "\" must be an integer between 1 and " + std::to_string(cap);
    return std::nullopt;
  }
  return static_cast<std::size_t>(v.get<std::int64_t>());
}

}  // namespace

ProgramService::ProgramService(ServiceOptions options) : options_(std::move(options)) {}

std::size_t ProgramService::size() const {
  std::lock_guard lock(mutex_);
  return lru_.size();
}

std::shared_ptr<const ProgramRecord> ProgramService::find(std::string_view id) {
  std::lock_guard lock(mutex_);
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return nullptr;
  lru_.splice(lru_.begin(), lru_, it->second);
  return *it->second;
}

std::shared_ptr<const ProgramRecord> ProgramService::insert(std::string source, std::shared_ptr<const Trace> trace) {
  std::lock_guard lock(mutex_);
  auto record = std::make_shared<ProgramRecord>();
  record->program_id = "p" + std::to_string(next_serial_++);
  record->source = std::move(source);
  record->trace = std::move(trace);
  record->created_at = std::chrono::system_clock::now();
  lru_.push_front(record);
  index_[record->program_id] = lru_.begin();
  while (lru_.size() > options_.capacity) {
    index_.erase(lru_.back()->program_id);
    lru_.pop_back();
  }
  return record;
}

HttpResponse ProgramService::create_program(std::string_view body_text) {
  ordered body = ordered::parse(body_text, nullptr, /*allow_exceptions=*/false);
  if (body.is_discarded() || !body.is_object()) return error_response(400, "request body must be a JSON object");
  if (!body.contains("source") || !body["source"].is_string()) {
    return error_response(400, "\"source\" must be a string");
  }
  std::string source = body["source"].get<std::string>();
  if (source.size() > options_.max_source_bytes) {
    return error_response(413, "source exceeds " + std::to_string(options_.max_source_bytes) + " bytes");
  }

  RunLimits limits = options_.default_limits;
  std::string problem;
  auto max_frames = limit_field(body, "max_frames", limits.max_frames, kMaxFramesCap, problem);
  auto max_nodes = limit_field(body, "max_nodes", limits.max_nodes, kMaxNodesCap, problem);
  if (!max_frames || !max_nodes) return error_response(400, problem);
  limits.max_frames = *max_frames;
  limits.max_nodes = *max_nodes;

  CompileResult compiled = compile(source);
  if (!compiled.ok()) return HttpResponse{422, json::encode_compile_errors(compiled.errors)};

  auto trace = std::make_shared<const Trace>(execute(compiled.compiled->program, compiled.compiled->symbols, limits));
  auto record = insert(std::move(source), trace);

  ordered j;
  j["program_id"] = record->program_id;
  j["frame_count"] = trace->frames.size();
  j["status"] = std::string(to_string(trace->status));
  j["error"] = ordered::parse(json::encode_runtime_error(trace->error));
  return HttpResponse{201, j.dump()};
}

HttpResponse ProgramService::get_program(std::string_view id) {
  auto record = find(id);
  if (!record) return error_response(404, "unknown program id");
  const Trace& trace = *record->trace;
  ordered j;
  j["program_id"] = record->program_id;
  j["source"] = record->source;
  j["frame_count"] = trace.frames.size();
  j["status"] = std::string(to_string(trace.status));
  j["error"] = ordered::parse(json::encode_runtime_error(trace.error));
  j["output"] = ordered::parse(json::encode_output(trace));
  return HttpResponse{200, j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)};
}

HttpResponse ProgramService::get_frames(std::string_view id, const std::map<std::string, std::string>& query) {
  auto record = find(id);
  if (!record) return error_response(404, "unknown program id");
  bool bad = false;
  auto from = query_index(query, "from", 0, bad);
  auto count = query_index(query, "count", 100, bad);
  if (bad || *count < 1 || *count > kMaxPage) {
    return error_response(400, "expected from >= 0 and 1 <= count <= " + std::to_string(kMaxPage));
  }
  const Trace& trace = *record->trace;
  if (*from >= trace.frames.size()) {
    return error_response(416, "from is beyond the last frame (" + std::to_string(trace.frames.size()) + " frames)");
  }
  return HttpResponse{200, json::encode_frame_page(trace, *from, *count)};
}

HttpResponse ProgramService::get_next_break(std::string_view id, const std::map<std::string, std::string>& query) {
  auto record = find(id);
  if (!record) return error_response(404, "unknown program id");
  const Trace& trace = *record->trace;

  bool bad = false;
  auto from = query_index(query, "from", 0, bad);
  if (bad || *from >= trace.frames.size()) return error_response(400, "from must address an existing frame");

  Direction direction = Direction::forward;
  if (auto it = query.find("dir"); it != query.end()) {
    if (it->second == "back") {
      direction = Direction::back;
    } else if (it->second != "forward") {
      return error_response(400, "dir must be forward or back");
    }
  }

  std::set<int> lines;
  if (auto it = query.find("lines"); it != query.end()) {
    std::string_view csv = it->second;
    while (!csv.empty()) {
      auto comma = csv.find(',');
      std::string_view item = csv.substr(0, comma);
      auto line = parse_index(item);
      if (!line || *line < 1 || *line > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
        return error_response(400, "lines must be a comma separated list of positive integers");
      }
      lines.insert(static_cast<int>(*line));
      if (comma == std::string_view::npos) break;
      csv.remove_prefix(comma + 1);
      if (csv.empty()) return error_response(400, "lines must not end with a comma");
    }
  }

  ordered j;
  j["index"] = next_break(trace, *from, direction, lines);
  return HttpResponse{200, j.dump()};
}

HttpResponse ProgramService::handle(const HttpRequest& request) {
  std::string_view path = request.path;
  if (request.method == "OPTIONS") return HttpResponse{204, ""};
  if (path.substr(0, kPrefix.size()) != kPrefix) return error_response(404, "not found");
  path.remove_prefix(kPrefix.size());

  if (path.empty() || path == "/") {
    if (request.method != "POST") return error_response(405, "method not allowed");
    return create_program(request.body);
  }
  if (path.front() != '/') return error_response(404, "not found");
  path.remove_prefix(1);

  auto slash = path.find('/');
  std::string_view id = path.substr(0, slash);
  std::string_view rest = slash == std::string_view::npos ? std::string_view{} : path.substr(slash);
  if (id.empty()) return error_response(404, "not found");
  if (request.method != "GET") return error_response(405, "method not allowed");

  if (rest.empty()) return get_program(id);
  if (rest == "/frames") return get_frames(id, request.query);
  if (rest == "/next-break") return get_next_break(id, request.query);
  return error_response(404, "not found");
}

}  // namespace jalgo

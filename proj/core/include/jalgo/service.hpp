// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstddef>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "jalgo/interpreter.hpp"

namespace jalgo {

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string body;  // always JSON
};

/// A compiled and fully traced program held by the service. Immutable.
struct ProgramRecord {
  std::string program_id;
  std::string source;
  std::shared_ptr<const Trace> trace;
  std::chrono::system_clock::time_point created_at;
};

struct ServiceOptions {
  std::size_t capacity = 256;  // least recently used records beyond this are evicted
  std::size_t max_source_bytes = 1 << 20;
  RunLimits default_limits;
};

/// Transport-independent implementation of the JSON API:
///
///   POST /api/programs
///   GET  /api/programs/{id}
///   GET  /api/programs/{id}/frames?from=&count=
///   GET  /api/programs/{id}/next-break?from=&dir=&lines=
///
/// Holds no navigation state; safe to call from several threads.
class ProgramService {
 public:
  explicit ProgramService(ServiceOptions options = {});

  HttpResponse handle(const HttpRequest& request);

  HttpResponse create_program(std::string_view body);
  HttpResponse get_program(std::string_view id);
  HttpResponse get_frames(std::string_view id, const std::map<std::string, std::string>& query);
  HttpResponse get_next_break(std::string_view id, const std::map<std::string, std::string>& query);

  std::shared_ptr<const ProgramRecord> find(std::string_view id);
  std::size_t size() const;

 private:
  std::shared_ptr<const ProgramRecord> insert(std::string source, std::shared_ptr<const Trace> trace);

  ServiceOptions options_;
  mutable std::mutex mutex_;
  std::uint64_t next_serial_ = 1;
  std::list<std::shared_ptr<const ProgramRecord>> lru_;  // front = most recent
  std::unordered_map<std::string, std::list<std::shared_ptr<const ProgramRecord>>::iterator> index_;
};

}  // namespace jalgo

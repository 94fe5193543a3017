// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "jalgo/service.hpp"

namespace jalgo {

/// Serves a ProgramService over HTTP/1.1. Every response carries
/// `Content-Type: application/json` and an allow-all CORS header.
class HttpServer {
 public:
  using Logger = std::function<void(std::string_view)>;

  explicit HttpServer(ProgramService& service, Logger logger = {});
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds without accepting yet. Port 0 picks an ephemeral port. Returns the
  /// bound port, or -1 when the address cannot be bound.
  int bind(const std::string& address, int port);

  /// Accept loop; returns after stop().
  bool listen();
  /// Blocks until listen() is accepting connections.
  void wait_until_ready() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace jalgo

// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/http_server.hpp"

#include <string>

#include "httplib.h"

namespace jalgo {

struct HttpServer::Impl {
  Impl(ProgramService& s, Logger l) : service(s), logger(std::move(l)) {}

  ProgramService& service;
  Logger logger;
  httplib::Server server;

  void dispatch(const httplib::Request& req, httplib::Response& res) {
    HttpRequest request;
    request.method = req.method;
    request.path = req.path;
    request.body = req.body;
    for (const auto& [key, value] : req.params) request.query.emplace(key, value);
    HttpResponse response = service.handle(request);
    res.status = response.status;
    if (response.status != 204) res.set_content(response.body, "application/json");
  }
};

HttpServer::HttpServer(ProgramService& service, Logger logger)
    : impl_(std::make_unique<Impl>(service, std::move(logger))) {
  auto& svr = impl_->server;
  auto handler = [impl = impl_.get()](const httplib::Request& req, httplib::Response& res) {
    impl->dispatch(req, res);
  };
  svr.Get(".*", handler);
  svr.Post(".*", handler);
  svr.Put(".*", handler);
  svr.Delete(".*", handler);
  svr.Options(".*", handler);
  svr.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  svr.set_payload_max_length(8u << 20);
  // httplib's defaults add SO_REUSEPORT, which would let a second server
  // silently share a busy port. Keep SO_REUSEADDR only.
  svr.set_socket_options([](auto sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  svr.set_logger([impl = impl_.get()](const httplib::Request& req, const httplib::Response& res) {
    if (!impl->logger) return;
    std::string line = req.method + " " + req.path;
    if (!req.params.empty()) {
      char sep = '?';
      for (const auto& [k, v] : req.params) {
        line += sep + k + "=" + v;
        sep = '&';
      }
    }
    line += " " + std::to_string(res.status);
    impl->logger(line);
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& address, int port) {
  auto& svr = impl_->server;
  if (port == 0) return svr.bind_to_any_port(address);
  return svr.bind_to_port(address, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace jalgo

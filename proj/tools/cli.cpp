// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "debugger.hpp"
#include "jalgo/compiler.hpp"
#include "jalgo/http_server.hpp"
#include "jalgo/interpreter.hpp"
#include "jalgo/service.hpp"
#include "jalgo/trace_json.hpp"

namespace jalgo::cli {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return std::move(buf).str();
}

struct Loaded {
  std::string source;
  std::shared_ptr<const CompiledProgram> compiled;
};

// Reads and compiles `path`, printing diagnostics. Returns the exit code on
// failure.
std::variant<Loaded, int> load(const std::string& path, std::ostream& err) {
  auto source = read_file(path);
  if (!source) {
    err << "jalgo: cannot read '" << path << "'\n";
    return kIoError;
  }
  CompileResult result = compile(*source);
  if (!result.ok()) {
    for (const auto& e : result.errors) err << format_diagnostic(path, e) << "\n";
    return kCompileError;
  }
  return Loaded{std::move(*source), result.compiled};
}

void report_failure(const std::string& path, const Trace& trace, const RunLimits& limits, std::ostream& err) {
  if (trace.status == TraceStatus::runtime_error) {
    err << path << ":" << trace.error->line << ": runtime error: " << trace.error->message << " ["
        << trace.error->code << "]\n";
  } else if (trace.status == TraceStatus::step_limit) {
    err << path << ": step limit of " << limits.max_frames << " frames reached [R-7]\n";
  }
}

std::atomic<HttpServer*> g_server{nullptr};

extern "C" void on_signal(int) {
  if (HttpServer* s = g_server.load()) s->stop();
}

int serve(const std::string& bind, std::optional<int> port_flag, std::ostream& out, std::ostream& err) {
  int port = kDefaultPort;
  if (const char* env = std::getenv("JALGO_PORT"); env != nullptr && *env != '\0') {
    try {
      port = std::stoi(env);
    } catch (const std::exception&) {
      err << "jalgo: JALGO_PORT is not a number: " << env << "\n";
      return kUsageError;
    }
  }
  if (port_flag) port = *port_flag;
  if (port < 0 || port > 65535) {
    err << "jalgo: port out of range: " << port << "\n";
    return kUsageError;
  }

  ProgramService service;
  std::mutex log_mutex;
  HttpServer server(service, [&err, &log_mutex](std::string_view line) {
    std::lock_guard lock(log_mutex);
    err << line << std::endl;
  });
  const int bound = server.bind(bind, port);
  if (bound < 0) {
    err << "jalgo: cannot bind " << bind << ":" << port << "\n";
    return kIoError;
  }
  out << "jalgo: listening on http://" << bind << ":" << bound << std::endl;

  g_server = &server;
  auto previous_int = std::signal(SIGINT, on_signal);
  auto previous_term = std::signal(SIGTERM, on_signal);
  const bool ok = server.listen();
  std::signal(SIGINT, previous_int);
  std::signal(SIGTERM, previous_term);
  g_server = nullptr;
  return ok ? kSuccess : kIoError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"jAlgo: compile, run, trace and step through tree algorithms", "jalgo"};
  app.require_subcommand(1);

  std::string file;
  RunLimits limits;

  auto* check = app.add_subcommand("check", "Report lexical, syntax and semantic errors");
  check->add_option("file", file, "Source file (.jalgo)")->required();

  auto* run_cmd = app.add_subcommand("run", "Run a program and print its output");
  run_cmd->add_option("file", file, "Source file (.jalgo)")->required();
  run_cmd->add_option("--max-frames", limits.max_frames, "Frame limit")->check(CLI::PositiveNumber);
  run_cmd->add_option("--max-nodes", limits.max_nodes, "Node limit")->check(CLI::PositiveNumber);

  std::string format = "json";
  std::string out_path;
  auto* trace_cmd = app.add_subcommand("trace", "Write the full execution trace as JSON");
  trace_cmd->add_option("file", file, "Source file (.jalgo)")->required();
  trace_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));
  trace_cmd->add_option("--out", out_path, "Write to this path instead of standard output");
  trace_cmd->add_option("--max-frames", limits.max_frames, "Frame limit")->check(CLI::PositiveNumber);
  trace_cmd->add_option("--max-nodes", limits.max_nodes, "Node limit")->check(CLI::PositiveNumber);

  auto* debug_cmd = app.add_subcommand("debug", "Step through a program interactively");
  debug_cmd->add_option("file", file, "Source file (.jalgo)")->required();
  debug_cmd->add_option("--max-frames", limits.max_frames, "Frame limit")->check(CLI::PositiveNumber);
  debug_cmd->add_option("--max-nodes", limits.max_nodes, "Node limit")->check(CLI::PositiveNumber);

  std::optional<int> port;
  std::string bind = "127.0.0.1";
  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP/JSON API");
  serve_cmd->add_option("--port", port, "Port (0 picks a free one; default 8321 or $JALGO_PORT)");
  serve_cmd->add_option("--bind", bind, "Address to bind");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  if (serve_cmd->parsed()) return serve(bind, port, out, err);

  auto loaded = load(file, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const Loaded& program = std::get<Loaded>(loaded);
  if (check->parsed()) return kSuccess;

  auto trace = std::make_shared<const Trace>(execute(program.compiled->program, program.compiled->symbols, limits));

  if (run_cmd->parsed()) {
    for (const auto& ev : trace->output) out << ev.text << "\n";
    out.flush();
    report_failure(file, *trace, limits, err);
    return trace->status == TraceStatus::completed ? kSuccess : kRuntimeError;
  }

  if (trace_cmd->parsed()) {
    const std::string doc = json::encode_trace(*trace) + "\n";
    if (out_path.empty()) {
      out << doc;
      out.flush();
    } else {
      std::ofstream file_out(out_path, std::ios::binary | std::ios::trunc);
      if (!(file_out << doc)) {
        err << "jalgo: cannot write '" << out_path << "'\n";
        return kIoError;
      }
    }
    report_failure(file, *trace, limits, err);
    return trace->status == TraceStatus::completed ? kSuccess : kRuntimeError;
  }

  Debugger debugger(program.source, trace);
  report_failure(file, *trace, limits, err);
  debugger.run(in, out);
  return kSuccess;
}

}  // namespace jalgo::cli

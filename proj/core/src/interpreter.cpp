// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

#include "jalgo/interpreter.hpp"

#include <limits>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>

#include "jalgo/value.hpp"

namespace jalgo {

std::string_view to_string(TraceStatus status) {
  switch (status) {
    case TraceStatus::completed: return "completed";
    case TraceStatus::runtime_error: return "runtime_error";
    case TraceStatus::step_limit: return "step_limit";
  }
  return "unknown";
}

namespace {

struct StepLimitReached {};

struct Fault {
  std::string code;
  std::string message;
};

[[noreturn]] void fail(const char* code, std::string message) { throw Fault{code, std::move(message)}; }

using Env = std::unordered_map<std::string, Value>;

class Machine {
 public:
  Machine(const Program& program, const SymbolTable& symbols, const RunLimits& limits,
          std::span<const FrameObserver> observers)
      : program_(program), symbols_(symbols), limits_(limits), observers_(observers) {
    for (const auto& fn : program_.functions) functions_.emplace(fn.name, &fn);
  }

  Trace run() && {
    try {
      Env env;
      exec_block(program_.main, env);
      emit(0);
      trace_.status = TraceStatus::completed;
    } catch (const StepLimitReached&) {
      trace_.status = TraceStatus::step_limit;
    } catch (Fault& f) {
      trace_.status = TraceStatus::runtime_error;
      trace_.error = RuntimeError{std::move(f.code), std::move(f.message), line_};
    }
    return std::move(trace_);
  }

 private:
  // --- frames ----------------------------------------------------------------

  void emit(int line) {
    if (trace_.frames.size() >= limits_.max_frames) throw StepLimitReached{};
    line_ = line;
    trace_.frames.push_back(Frame{trace_.frames.size(), line, store_.snapshot()});
    const Frame& frame = trace_.frames.back();
    for (const auto& observer : observers_) observer(frame);
  }

  // --- statements ------------------------------------------------------------

  // Returns the value of an executed `return`, if any.
  std::optional<Value> exec_block(const StmtList& stmts, Env& env) {
    for (const auto& s : stmts) {
      if (auto ret = exec(s, env)) return ret;
    }
    return std::nullopt;
  }

  std::optional<Value> exec(const Stmt& s, Env& env) {
    return std::visit(
        [&](const auto& n) -> std::optional<Value> {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, AssignStmt>) {
            emit(s.line);
            env.insert_or_assign(n.target, eval(n.value, env));
          } else if constexpr (std::is_same_v<T, CallStmt>) {
            emit(s.line);
            call(n.call, env);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            emit(s.line);
            return n.value ? eval(*n.value, env) : Value{};
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            emit(s.line);
            const auto& body = condition(n.condition, env, "if") ? n.then_body : n.else_body;
            return exec_block(body, env);
          } else {
            for (;;) {
              emit(s.line);
              if (!condition(n.condition, env, "while")) break;
              if (auto ret = exec_block(n.body, env)) return ret;
            }
          }
          return std::nullopt;
        },
        s.node);
  }

  bool condition(const Expr& e, Env& env, const char* what) {
    Value v = eval(e, env);
    if (!v.is_bool()) {
      fail("R-5", std::string(what) + " condition must be bool, got " + std::string(type_name(v)));
    }
    return v.as_bool();
  }

  // --- expressions -----------------------------------------------------------

  Value eval(const Expr& e, Env& env) {
    return std::visit(
        [&](const auto& n) -> Value {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, IntLit>) {
            return n.value;
          } else if constexpr (std::is_same_v<T, BoolLit>) {
            return n.value;
          } else if constexpr (std::is_same_v<T, NilLit>) {
            return Nil{};
          } else if constexpr (std::is_same_v<T, VarRef>) {
            auto it = env.find(n.name);
            if (it == env.end()) fail("R-1", "variable '" + n.name + "' is read before it is assigned");
            return it->second;
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            return call(n, env);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            return unary(n.op, eval(*n.operand, env));
          } else {
            return binary(n, env);
          }
        },
        e.node);
  }

  static Value unary(UnaryOp op, const Value& v) {
    if (op == UnaryOp::logical_not) {
      if (!v.is_bool()) fail("R-5", "'not' needs a bool, got " + std::string(type_name(v)));
      return !v.as_bool();
    }
    if (!v.is_int()) fail("R-5", "unary '-' needs an int, got " + std::string(type_name(v)));
    if (v.as_int() == std::numeric_limits<std::int64_t>::min()) fail("R-9", "integer overflow in negation");
    return -v.as_int();
  }

  static void type_error(BinaryOp op, const Value& a, const Value& b) {
    fail("R-5", "operator '" + std::string(spelling(op)) + "' cannot be applied to " + std::string(type_name(a)) +
                    " and " + std::string(type_name(b)));
  }

  static bool is_reference(const Value& v) { return v.is_node() || v.is_nil(); }

  Value binary(const BinaryExpr& n, Env& env) {
    if (n.op == BinaryOp::logical_and || n.op == BinaryOp::logical_or) {
      Value lhs = eval(*n.lhs, env);
      if (!lhs.is_bool()) fail("R-5", "'" + std::string(spelling(n.op)) + "' needs bool operands, got " +
                                          std::string(type_name(lhs)));
      if (lhs.as_bool() == (n.op == BinaryOp::logical_or)) return lhs;
      Value rhs = eval(*n.rhs, env);
      if (!rhs.is_bool()) fail("R-5", "'" + std::string(spelling(n.op)) + "' needs bool operands, got " +
                                          std::string(type_name(rhs)));
      return rhs;
    }

    Value a = eval(*n.lhs, env);
    Value b = eval(*n.rhs, env);

    if (n.op == BinaryOp::eq || n.op == BinaryOp::ne) {
      bool comparable = (a.is_int() && b.is_int()) || (a.is_bool() && b.is_bool()) ||
                        (is_reference(a) && is_reference(b));
      if (!comparable) type_error(n.op, a, b);
      return (a == b) == (n.op == BinaryOp::eq);
    }

    if (!a.is_int() || !b.is_int()) type_error(n.op, a, b);
    const std::int64_t x = a.as_int();
    const std::int64_t y = b.as_int();
    std::int64_t r = 0;
    switch (n.op) {
      case BinaryOp::lt: return x < y;
      case BinaryOp::le: return x <= y;
      case BinaryOp::gt: return x > y;
      case BinaryOp::ge: return x >= y;
      case BinaryOp::add:
        if (__builtin_add_overflow(x, y, &r)) fail("R-9", "integer overflow in '+'");
        return r;
      case BinaryOp::sub:
        if (__builtin_sub_overflow(x, y, &r)) fail("R-9", "integer overflow in '-'");
        return r;
      case BinaryOp::mul:
        if (__builtin_mul_overflow(x, y, &r)) fail("R-9", "integer overflow in '*'");
        return r;
      case BinaryOp::div:
        if (y == 0) fail("R-6", "division by zero");
        if (x == std::numeric_limits<std::int64_t>::min() && y == -1) fail("R-9", "integer overflow in '/'");
        return x / y;
      case BinaryOp::mod:
        if (y == 0) fail("R-6", "modulo by zero");
        if (y == -1) return std::int64_t{0};
        return x % y;
      default:
        break;
    }
    type_error(n.op, a, b);
    return Nil{};
  }

  // --- calls -----------------------------------------------------------------

  Value call(const CallExpr& c, Env& env) {
    std::vector<Value> args;
    args.reserve(c.args.size());
    for (const auto& a : c.args) args.push_back(eval(a, env));

    const FunctionSymbol* symbol = symbols_.find_function(c.name);
    if (symbol != nullptr && symbol->is_builtin) return call_builtin(find_builtin(c.name)->id, c.name, args);

    auto it = functions_.find(c.name);
    // Resolution is guaranteed by the analyzer; this guards callers that skipped it.
    if (symbol == nullptr || it == functions_.end()) fail("R-5", "unknown function '" + c.name + "'");
    const FunctionDef& fn = *it->second;
    if (fn.params.size() != args.size()) fail("R-5", "wrong number of arguments to '" + c.name + "'");
    if (depth_ >= limits_.max_call_depth) {
      fail("R-10", "call depth exceeds " + std::to_string(limits_.max_call_depth));
    }

    Env local;
    for (std::size_t i = 0; i < args.size(); ++i) local.insert_or_assign(fn.params[i], args[i]);
    const int caller_line = line_;
    ++depth_;
    std::optional<Value> ret = exec_block(fn.body, local);
    --depth_;
    line_ = caller_line;
    return ret.value_or(Value{});
  }

  NodeId node_arg(const Value& v, std::string_view fn) {
    if (v.is_nil()) fail("R-2", std::string(fn) + " needs a node, got nil");
    if (!v.is_node()) fail("R-5", std::string(fn) + " needs a node, got " + std::string(type_name(v)));
    if (!store_.contains(v.as_node())) fail("R-2", std::string(fn) + " got a node that does not exist");
    return v.as_node();
  }

  std::int64_t int_arg(const Value& v, std::string_view fn) {
    if (!v.is_int()) fail("R-5", std::string(fn) + " needs an int, got " + std::string(type_name(v)));
    return v.as_int();
  }

  std::optional<NodeId> optional_node_arg(const Value& v, std::string_view fn) {
    if (v.is_nil()) return std::nullopt;
    return node_arg(v, fn);
  }

  Value call_builtin(Builtin id, std::string_view name, const std::vector<Value>& args) {
    switch (id) {
      case Builtin::new_node: {
        std::int64_t v = int_arg(args[0], name);
        if (store_.size() >= limits_.max_nodes) {
          fail("R-8", "node count exceeds the limit of " + std::to_string(limits_.max_nodes));
        }
        NodeId n = store_.alloc(v);
        store_.select(n);
        return n;
      }
      case Builtin::value: {
        NodeId n = node_arg(args[0], name);
        store_.select(n);
        return store_.value(n);
      }
      case Builtin::set_value: {
        NodeId n = node_arg(args[0], name);
        std::int64_t v = int_arg(args[1], name);
        store_.set_value(n, v);
        store_.select(n);
        return Nil{};
      }
      case Builtin::left:
      case Builtin::right: {
        NodeId n = node_arg(args[0], name);
        store_.select(n);
        auto child = store_.child(n, id == Builtin::left ? Side::left : Side::right);
        return child ? Value{*child} : Value{};
      }
      case Builtin::set_left:
      case Builtin::set_right: {
        NodeId n = node_arg(args[0], name);
        std::optional<NodeId> child = optional_node_arg(args[1], name);
        if (auto err = store_.set_child(n, id == Builtin::set_left ? Side::left : Side::right, child)) {
          tree_fault(*err, name, n, child.value_or(NodeId{}));
        }
        store_.select(n);
        return Nil{};
      }
      case Builtin::select:
        store_.select(optional_node_arg(args[0], name));
        return Nil{};
      case Builtin::is_nil:
        return args[0].is_nil();
      case Builtin::print:
        trace_.output.push_back(OutputEvent{trace_.frames.size() - 1, to_display(args[0])});
        return Nil{};
    }
    return Nil{};
  }

  [[noreturn]] static void tree_fault(TreeError err, std::string_view fn, NodeId parent, NodeId child) {
    const std::string c = "node#" + std::to_string(child.value);
    const std::string p = "node#" + std::to_string(parent.value);
    switch (err) {
      case TreeError::already_attached:
        fail("R-3", std::string(fn) + ": " + c + " already has a parent");
      case TreeError::cycle:
        fail("R-4", std::string(fn) + ": attaching " + c + " under " + p + " would create a cycle");
      case TreeError::not_a_node:
        break;
    }
    fail("R-2", std::string(fn) + " got a node that does not exist");
  }

  const Program& program_;
  const SymbolTable& symbols_;
  RunLimits limits_;
  std::span<const FrameObserver> observers_;
  std::unordered_map<std::string, const FunctionDef*> functions_;
  NodeStore store_;
  Trace trace_;
  std::size_t depth_ = 0;
  int line_ = 0;
};

}  // namespace

Trace execute(const Program& program, const SymbolTable& symbols, const RunLimits& limits,
              std::span<const FrameObserver> observers) {
  return Machine(program, symbols, limits, observers).run();
}

}  // namespace jalgo

// Copyright 2026 The jAlgo Authors
// SPDX-License-Identifier: Apache-2.0

// Random generators for well-formed jAlgo programs. Every generated program
// compiles; it may still fail at run time or run until the step limit.

#pragma once

#include <random>
#include <string>
#include <vector>

namespace jalgo::testing {

class ProgramGenerator {
 public:
  explicit ProgramGenerator(std::mt19937_64& rng) : rng_(rng) {}

  std::string program() {
    functions_.clear();
    const int fn_count = pick(0, 2);
    for (int i = 0; i < fn_count; ++i) functions_.push_back(pick(0, 2));

    std::string out;
    for (int i = 0; i < fn_count; ++i) {
      out += "function f" + std::to_string(i) + "(";
      for (int p = 0; p < functions_[static_cast<std::size_t>(i)]; ++p) out += (p ? ", p" : "p") + std::to_string(p);
      out += ")\n";
      scope_ = locals_for(functions_[static_cast<std::size_t>(i)]);
      in_function_ = true;
      out += block(2, 1);
      out += "  return " + int_expr(1) + "\n";
      out += "end\n";
    }
    scope_ = {"a", "b", "c", "d"};
    in_function_ = false;
    out += "begin\n";
    out += block(3, 1);
    out += "end\n";
    return out;
  }

  /// A program that never terminates and never fails before the step limit.
  std::string endless_program() {
    std::string out = "begin\n  n := 0\n";
    const int prelude = pick(0, 3);
    for (int i = 0; i < prelude; ++i) out += "  x" + std::to_string(i) + " := " + std::to_string(pick(0, 9)) + "\n";
    out += "  while true do\n";
    const int body = pick(0, 3);
    for (int i = 0; i < body; ++i) {
      switch (pick(0, 2)) {
        case 0: out += "    n := n + 1\n"; break;
        case 1: out += "    print(n)\n"; break;
        default: out += "    if n > 5 then\n      n := 0\n    end\n"; break;
      }
    }
    out += "  end\nend\n";
    return out;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  static std::vector<std::string> locals_for(int params) {
    std::vector<std::string> names{"a", "b"};
    for (int p = 0; p < params; ++p) names.push_back("p" + std::to_string(p));
    return names;
  }

  std::string var() { return scope_[static_cast<std::size_t>(pick(0, static_cast<int>(scope_.size()) - 1))]; }

  std::string indent(int depth) const { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

  std::string block(int max_stmts, int depth) {
    std::string out;
    const int n = pick(0, max_stmts);
    for (int i = 0; i < n; ++i) out += stmt(depth);
    return out;
  }

  std::string call_user(int depth) {
    const int f = pick(0, static_cast<int>(functions_.size()) - 1);
    std::string out = "f" + std::to_string(f) + "(";
    for (int p = 0; p < functions_[static_cast<std::size_t>(f)]; ++p) {
      out += (p ? ", " : "") + int_expr(depth - 1);
    }
    return out + ")";
  }

  std::string stmt(int depth) {
    const std::string pad = indent(depth);
    const int kind = depth >= 3 ? pick(0, 3) : pick(0, 7);
    switch (kind) {
      case 0: return pad + var() + " := " + int_expr(2) + "\n";
      case 1: return pad + var() + " := " + node_expr(2) + "\n";
      case 2: {
        static constexpr const char* kSetters[] = {"setLeft", "setRight"};
        return pad + kSetters[pick(0, 1)] + "(" + var() + ", " + node_expr(1) + ")\n";
      }
      case 3:
        switch (pick(0, 3)) {
          case 0: return pad + "setValue(" + var() + ", " + int_expr(1) + ")\n";
          case 1: return pad + "select(" + (pick(0, 3) == 0 ? std::string("nil") : var()) + ")\n";
          case 2: return pad + "print(" + (pick(0, 1) ? int_expr(1) : var()) + ")\n";
          default:
            if (functions_.empty()) return pad + "print(" + var() + ")\n";
            return pad + call_user(2) + "\n";
        }
      case 4: {
        std::string out = pad + "if " + bool_expr(2) + " then\n" + block(2, depth + 1);
        if (pick(0, 1)) out += pad + "else\n" + block(2, depth + 1);
        return out + pad + "end\n";
      }
      case 5: {
        // Counted loop so most runs finish; the counter may still be clobbered.
        const std::string counter = var();
        return pad + counter + " := 0\n" + pad + "while " + counter + " < " + std::to_string(pick(1, 4)) +
               " do\n" + block(2, depth + 1) + indent(depth + 1) + counter + " := " + counter + " + 1\n" + pad +
               "end\n";
      }
      case 6:
        if (in_function_) return pad + "return " + (pick(0, 1) ? int_expr(1) : node_expr(1)) + "\n";
        return pad + var() + " := " + bool_expr(1) + "\n";
      default:
        return pad + "while " + bool_expr(1) + " do\n" + block(1, depth + 1) + pad + "end\n";
    }
  }

  std::string int_expr(int depth) {
    const int kind = depth <= 0 ? pick(0, 1) : pick(0, 5);
    switch (kind) {
      case 0: return std::to_string(pick(0, 9));
      case 1: return var();
      case 2: return "value(" + node_expr(depth - 1) + ")";
      case 3: {
        static constexpr const char* kOps[] = {"+", "-", "*", "/", "mod"};
        return "(" + int_expr(depth - 1) + " " + kOps[pick(0, 4)] + " " + int_expr(depth - 1) + ")";
      }
      case 4: return "-" + std::to_string(pick(1, 9));
      default:
        if (functions_.empty()) return var();
        return call_user(depth);
    }
  }

  std::string node_expr(int depth) {
    const int kind = depth <= 0 ? pick(0, 1) : pick(0, 4);
    switch (kind) {
      case 0: return "nil";
      case 1: return var();
      case 2: return "newNode(" + int_expr(depth - 1) + ")";
      case 3: return "left(" + var() + ")";
      default: return "right(" + var() + ")";
    }
  }

  std::string bool_expr(int depth) {
    const int kind = depth <= 0 ? pick(0, 1) : pick(0, 5);
    static constexpr const char* kCmp[] = {"=", "<>", "<", "<=", ">", ">="};
    switch (kind) {
      case 0: return pick(0, 1) ? "true" : "false";
      case 1: return "isNil(" + var() + ")";
      case 2: return int_expr(depth - 1) + " " + kCmp[pick(0, 5)] + " " + int_expr(depth - 1);
      case 3: return "not " + bool_expr(0);
      case 4: return "(" + bool_expr(depth - 1) + " and " + bool_expr(depth - 1) + ")";
      default: return "(" + bool_expr(depth - 1) + " or " + bool_expr(depth - 1) + ")";
    }
  }

  std::mt19937_64& rng_;
  std::vector<int> functions_;  // arity per generated function
  std::vector<std::string> scope_;
  bool in_function_ = false;
};

}  // namespace jalgo::testing

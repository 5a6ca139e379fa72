// Copyright 2026 The qcc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qcc/qasm/ast.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace qcc::qasm {

ExprPtr Expr::number(double v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Number;
  e->value = v;
  return e;
}

ExprPtr Expr::pi() {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pi;
  return e;
}

ExprPtr Expr::param(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Param;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::unary(Kind kind, ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr Expr::binary(Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr Expr::call(std::string fn, ExprPtr arg) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Call;
  e->name = std::move(fn);
  e->lhs = std::move(arg);
  return e;
}

double evaluate(const Expr& expr, const std::map<std::string, double>& env) {
  using K = Expr::Kind;
  switch (expr.kind) {
    case K::Number:
      return expr.value;
    case K::Pi:
      return std::numbers::pi;
    case K::Param: {
      const auto it = env.find(expr.name);
      if (it == env.end()) {
        throw SemanticError("unbound parameter '" + expr.name + "'");
      }
      return it->second;
    }
    case K::Negate:
      return -evaluate(*expr.lhs, env);
    case K::Add:
      return evaluate(*expr.lhs, env) + evaluate(*expr.rhs, env);
    case K::Sub:
      return evaluate(*expr.lhs, env) - evaluate(*expr.rhs, env);
    case K::Mul:
      return evaluate(*expr.lhs, env) * evaluate(*expr.rhs, env);
    case K::Div:
      return evaluate(*expr.lhs, env) / evaluate(*expr.rhs, env);
    case K::Pow:
      return std::pow(evaluate(*expr.lhs, env), evaluate(*expr.rhs, env));
    case K::Call: {
      const double x = evaluate(*expr.lhs, env);
      if (expr.name == "sin") return std::sin(x);
      if (expr.name == "cos") return std::cos(x);
      if (expr.name == "tan") return std::tan(x);
      if (expr.name == "exp") return std::exp(x);
      if (expr.name == "ln") return std::log(x);
      if (expr.name == "sqrt") return std::sqrt(x);
      throw SemanticError("unknown function '" + expr.name + "'");
    }
  }
  return 0.0;
}

bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Expr::Kind::Number && !(a.value == b.value)) return false;
  if (a.name != b.name) return false;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
  if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
  if (a.lhs && !same_structure(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !same_structure(*a.rhs, *b.rhs)) return false;
  return true;
}

namespace {

bool same(const Argument& a, const Argument& b) {
  return a.reg == b.reg && a.index == b.index;
}

template <typename T, typename F>
bool same_list(const std::vector<T>& a, const std::vector<T>& b, F eq) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq(a[i], b[i])) return false;
  }
  return true;
}

bool same(const GateCall& a, const GateCall& b) {
  return a.name == b.name &&
         same_list(a.params, b.params,
                   [](const ExprPtr& x, const ExprPtr& y) {
                     return same_structure(*x, *y);
                   }) &&
         same_list(a.args, b.args, [](const Argument& x, const Argument& y) {
           return same(x, y);
         });
}

bool same(const MeasureStmt& a, const MeasureStmt& b) {
  return same(a.qubit, b.qubit) && same(a.bit, b.bit);
}
bool same(const ResetStmt& a, const ResetStmt& b) { return same(a.qubit, b.qubit); }
bool same(const BarrierStmt& a, const BarrierStmt& b) {
  return same_list(a.args, b.args, [](const Argument& x, const Argument& y) {
    return same(x, y);
  });
}

template <typename... Ts>
bool same_variant(const std::variant<Ts...>& a, const std::variant<Ts...>& b);

bool same(const IfStmt& a, const IfStmt& b) {
  return a.creg == b.creg && a.value == b.value && same_variant(a.body, b.body);
}

template <typename... Ts>
bool same_variant(const std::variant<Ts...>& a, const std::variant<Ts...>& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return same(x, std::get<T>(b));
      },
      a);
}

bool same(const GateDef& a, const GateDef& b) {
  return a.name == b.name && a.params == b.params && a.qubits == b.qubits &&
         same_list(a.body, b.body, [](const GateBodyStmt& x, const GateBodyStmt& y) {
           return same_variant(x, y);
         });
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* binary_symbol(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::Add:
      return "+";
    case Expr::Kind::Sub:
      return "-";
    case Expr::Kind::Mul:
      return "*";
    case Expr::Kind::Div:
      return "/";
    case Expr::Kind::Pow:
      return "^";
    default:
      return "?";
  }
}

void print_expr(std::ostream& os, const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
      os << format_number(e.value);
      break;
    case K::Pi:
      os << "pi";
      break;
    case K::Param:
      os << e.name;
      break;
    case K::Negate:
      os << "-(";
      print_expr(os, *e.lhs);
      os << ")";
      break;
    case K::Call:
      os << e.name << "(";
      print_expr(os, *e.lhs);
      os << ")";
      break;
    default:
      os << "(";
      print_expr(os, *e.lhs);
      os << binary_symbol(e.kind);
      print_expr(os, *e.rhs);
      os << ")";
      break;
  }
}

void print_arg(std::ostream& os, const Argument& a) {
  os << a.reg;
  if (a.index) os << "[" << *a.index << "]";
}

void print_args(std::ostream& os, const std::vector<Argument>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) os << ",";
    print_arg(os, args[i]);
  }
}

void print_stmt(std::ostream& os, const GateCall& g) {
  os << g.name;
  if (!g.params.empty()) {
    os << "(";
    for (std::size_t i = 0; i < g.params.size(); ++i) {
      if (i) os << ",";
      print_expr(os, *g.params[i]);
    }
    os << ")";
  }
  os << " ";
  print_args(os, g.args);
  os << ";";
}

void print_stmt(std::ostream& os, const MeasureStmt& m) {
  os << "measure ";
  print_arg(os, m.qubit);
  os << " -> ";
  print_arg(os, m.bit);
  os << ";";
}

void print_stmt(std::ostream& os, const ResetStmt& r) {
  os << "reset ";
  print_arg(os, r.qubit);
  os << ";";
}

void print_stmt(std::ostream& os, const BarrierStmt& b) {
  os << "barrier ";
  print_args(os, b.args);
  os << ";";
}

void print_stmt(std::ostream& os, const IfStmt& s) {
  os << "if(" << s.creg << "==" << s.value << ") ";
  std::visit([&](const auto& body) { print_stmt(os, body); }, s.body);
}

}  // namespace

bool same_structure(const QasmAst& a, const QasmAst& b) {
  return a.version == b.version && a.includes == b.includes &&
         same_list(a.declarations, b.declarations,
                   [](const Declaration& x, const Declaration& y) {
                     return x.kind == y.kind && x.name == y.name &&
                            x.size == y.size;
                   }) &&
         same_list(a.gate_defs, b.gate_defs,
                   [](const GateDef& x, const GateDef& y) { return same(x, y); }) &&
         same_list(a.statements, b.statements,
                   [](const Statement& x, const Statement& y) {
                     return same_variant(x, y);
                   });
}

std::string print_qasm(const QasmAst& ast) {
  std::ostringstream os;
  os << "OPENQASM " << ast.version << ";\n";
  for (const auto& inc : ast.includes) os << "include \"" << inc << "\";\n";
  for (const auto& d : ast.declarations) {
    os << (d.kind == Declaration::Kind::QReg ? "qreg " : "creg ") << d.name
       << "[" << d.size << "];\n";
  }
  for (const auto& g : ast.gate_defs) {
    os << "gate " << g.name;
    if (!g.params.empty()) {
      os << "(";
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i) os << ",";
        os << g.params[i];
      }
      os << ")";
    }
    os << " ";
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (i) os << ",";
      os << g.qubits[i];
    }
    os << " {\n";
    for (const auto& s : g.body) {
      os << "  ";
      std::visit([&](const auto& x) { print_stmt(os, x); }, s);
      os << "\n";
    }
    os << "}\n";
  }
  for (const auto& s : ast.statements) {
    std::visit([&](const auto& x) { print_stmt(os, x); }, s);
    os << "\n";
  }
  return os.str();
}

}  // namespace qcc::qasm

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
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcc/error.hpp"

namespace qcc::qasm {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Parameter expression. Top-level gate parameters are folded to Number at
/// parse time; expressions inside gate bodies keep their parameter references.
struct Expr {
  enum class Kind { Number, Pi, Param, Negate, Add, Sub, Mul, Div, Pow, Call };

  Kind kind = Kind::Number;
  double value = 0.0;
  /// Param name or function name for Call.
  std::string name;
  ExprPtr lhs;
  ExprPtr rhs;

  static ExprPtr number(double v);
  static ExprPtr pi();
  static ExprPtr param(std::string name);
  static ExprPtr unary(Kind kind, ExprPtr operand);
  static ExprPtr binary(Kind kind, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr call(std::string fn, ExprPtr arg);
};

/// Evaluates `expr`; unbound parameters raise SemanticError.
double evaluate(const Expr& expr, const std::map<std::string, double>& env = {});

/// `name` or `name[index]`.
struct Argument {
  std::string reg;
  std::optional<int> index;
  SourceSpan span;
};

struct GateCall {
  std::string name;
  std::vector<ExprPtr> params;
  std::vector<Argument> args;
  SourceSpan span;
};

struct MeasureStmt {
  Argument qubit;
  Argument bit;
  SourceSpan span;
};

struct ResetStmt {
  Argument qubit;
  SourceSpan span;
};

struct BarrierStmt {
  std::vector<Argument> args;
  SourceSpan span;
};

using QuantumOp = std::variant<GateCall, MeasureStmt, ResetStmt>;

struct IfStmt {
  std::string creg;
  std::int64_t value = 0;
  QuantumOp body;
  SourceSpan span;
};

using Statement =
    std::variant<GateCall, MeasureStmt, ResetStmt, BarrierStmt, IfStmt>;

struct Declaration {
  enum class Kind { QReg, CReg };
  Kind kind = Kind::QReg;
  std::string name;
  int size = 1;
  SourceSpan span;
};

using GateBodyStmt = std::variant<GateCall, BarrierStmt>;

/// `gate name(params) qubits { body }`
struct GateDef {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> qubits;
  std::vector<GateBodyStmt> body;
  SourceSpan span;
};

struct QasmAst {
  std::string version;
  std::vector<std::string> includes;
  std::vector<Declaration> declarations;
  std::vector<GateDef> gate_defs;
  std::vector<Statement> statements;
};

/// Structural equality; source spans are ignored.
bool same_structure(const QasmAst& a, const QasmAst& b);
bool same_structure(const Expr& a, const Expr& b);

/// Renders the AST back to OpenQASM 2.0. Declarations come first, then gate
/// definitions, then statements; numbers print with round-trip precision.
std::string print_qasm(const QasmAst& ast);

}  // namespace qcc::qasm

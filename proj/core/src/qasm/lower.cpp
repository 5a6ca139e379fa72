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
#include "qcc/qasm/lower.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "qcc/ir/gate_table.hpp"
#include "qcc/qasm/parser.hpp"

namespace qcc::qasm {
namespace {

using ir::IrOp;
using ir::QubitRef;

class Lowering {
 public:
  explicit Lowering(const QasmAst& ast) : ast_(ast) {
    int base = 0;
    for (const auto& d : ast.declarations) {
      if (d.kind == Declaration::Kind::QReg) {
        const int id = static_cast<int>(registers_.size());
        registers_.push_back({id, d.name, d.size, base});
        qreg_index_[d.name] = id;
        base += d.size;
      } else {
        const int id = static_cast<int>(cregs_.size());
        cregs_.push_back({id, d.name, d.size});
        creg_index_[d.name] = id;
      }
    }
    for (const auto& g : ast.gate_defs) macros_[g.name] = &g;
  }

  ir::QuantumProgram run() {
    for (const auto& s : ast_.statements) {
      std::visit([&](const auto& stmt) { lower(stmt); }, s);
    }
    return ir::finalize_program(registers_, cregs_, std::move(body_));
  }

 private:
  using Sink = std::function<void(ir::Inst)>;

  int width_of(const Argument& a, bool quantum) const {
    if (a.index) return 0;
    if (quantum) return registers_[static_cast<std::size_t>(qreg_index_.at(a.reg))].size;
    return cregs_[static_cast<std::size_t>(creg_index_.at(a.reg))].size;
  }

  int broadcast_width(const std::vector<Argument>& args) const {
    int width = 0;
    for (const auto& a : args) width = std::max(width, width_of(a, true));
    return std::max(width, 1);
  }

  QubitRef qubit(const Argument& a, int i) const {
    const auto& r = registers_[static_cast<std::size_t>(qreg_index_.at(a.reg))];
    const int index = a.index ? *a.index : i;
    return {r.register_id, index, r.base + index};
  }

  ir::ResultRef clbit(const Argument& a, int i) const {
    const int id = creg_index_.at(a.reg);
    return {id, a.index ? *a.index : i};
  }

  Sink plain_sink() {
    return [this](ir::Inst inst) { body_.emplace_back(std::move(inst)); };
  }

  void lower(const GateCall& g) { lower_call(g, plain_sink()); }
  void lower(const MeasureStmt& m) { lower_measure(m, plain_sink()); }
  void lower(const ResetStmt& r) { lower_reset(r, plain_sink()); }

  void lower(const BarrierStmt& b) {
    ir::Barrier barrier;
    for (const auto& a : b.args) {
      const int w = a.index ? 1 : width_of(a, true);
      for (int i = 0; i < w; ++i) barrier.qubits.push_back(qubit(a, i));
    }
    body_.emplace_back(std::move(barrier));
  }

  void lower(const IfStmt& s) {
    const int creg = creg_index_.at(s.creg);
    const std::int64_t value = s.value;
    Sink wrap = [this, creg, value](ir::Inst inst) {
      body_.emplace_back(ir::ConditionalRegion{creg, value, std::move(inst)});
    };
    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, GateCall>) {
            lower_call(op, wrap);
          } else if constexpr (std::is_same_v<T, MeasureStmt>) {
            lower_measure(op, wrap);
          } else {
            lower_reset(op, wrap);
          }
        },
        s.body);
  }

  void lower_call(const GateCall& g, const Sink& sink) {
    std::vector<double> params;
    for (const auto& p : g.params) params.push_back(evaluate(*p));
    const int w = broadcast_width(g.args);
    for (int i = 0; i < w; ++i) {
      std::vector<QubitRef> qubits;
      for (const auto& a : g.args) qubits.push_back(qubit(a, i));
      apply(g.name, params, qubits, g.span, sink);
    }
  }

  void lower_measure(const MeasureStmt& m, const Sink& sink) {
    const int w = std::max(width_of(m.qubit, true), 1);
    for (int i = 0; i < w; ++i) {
      ir::Inst inst;
      inst.gate = std::string(ir::kMeasure);
      inst.qubits = {qubit(m.qubit, i)};
      inst.result = clbit(m.bit, i);
      inst.span = m.span;
      sink(std::move(inst));
    }
  }

  void lower_reset(const ResetStmt& r, const Sink& sink) {
    const int w = std::max(width_of(r.qubit, true), 1);
    for (int i = 0; i < w; ++i) {
      ir::Inst inst;
      inst.gate = std::string(ir::kReset);
      inst.qubits = {qubit(r.qubit, i)};
      inst.span = r.span;
      sink(std::move(inst));
    }
  }

  void apply(const std::string& name, const std::vector<double>& params,
             const std::vector<QubitRef>& qubits, const SourceSpan& span,
             const Sink& sink) {
    const auto macro = macros_.find(name);
    if (macro == macros_.end()) {
      ir::Inst inst;
      inst.gate = name == "U" ? "u3" : name == "CX" ? "cx" : name;
      inst.params = params;
      inst.qubits = qubits;
      inst.span = span;
      sink(std::move(inst));
      return;
    }
    const GateDef& def = *macro->second;
    if (std::find(active_.begin(), active_.end(), name) != active_.end()) {
      throw SemanticError("recursive gate definition '" + name + "'", def.span);
    }
    active_.push_back(name);
    std::map<std::string, double> env;
    for (std::size_t i = 0; i < def.params.size(); ++i) env[def.params[i]] = params[i];
    std::unordered_map<std::string, QubitRef> bound;
    for (std::size_t i = 0; i < def.qubits.size(); ++i) bound[def.qubits[i]] = qubits[i];
    for (const auto& stmt : def.body) {
      if (const auto* call = std::get_if<GateCall>(&stmt)) {
        std::vector<double> inner_params;
        for (const auto& p : call->params) inner_params.push_back(evaluate(*p, env));
        std::vector<QubitRef> inner_qubits;
        for (const auto& a : call->args) inner_qubits.push_back(bound.at(a.reg));
        apply(call->name, inner_params, inner_qubits, span, sink);
      } else {
        ir::Barrier barrier;
        for (const auto& a : std::get<BarrierStmt>(stmt).args) {
          barrier.qubits.push_back(bound.at(a.reg));
        }
        body_.emplace_back(std::move(barrier));
      }
    }
    active_.pop_back();
  }

  const QasmAst& ast_;
  std::vector<ir::QRegister> registers_;
  std::vector<ir::CRegister> cregs_;
  std::unordered_map<std::string, int> qreg_index_;
  std::unordered_map<std::string, int> creg_index_;
  std::unordered_map<std::string, const GateDef*> macros_;
  std::vector<std::string> active_;
  std::vector<IrOp> body_;
};

}  // namespace

ir::QuantumProgram lower_ast_to_ir(const QasmAst& ast) {
  return Lowering(ast).run();
}

ir::QuantumProgram compile_qasm(std::string_view source) {
  return lower_ast_to_ir(parse_qasm(source));
}

}  // namespace qcc::qasm

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
#include "qcc/ir/program.hpp"

#include <algorithm>
#include <numeric>

#include "qcc/ir/gate_table.hpp"

namespace qcc::ir {

bool Inst::is_measure() const { return gate == kMeasure; }
bool Inst::is_reset() const { return gate == kReset; }
bool Inst::is_single_qubit_gate() const {
  return qubits.size() == 1 && !is_measure() && !is_reset();
}

int QuantumProgram::num_qubits() const {
  return std::accumulate(
      registers.begin(), registers.end(), 0,
      [](int acc, const QRegister& r) { return acc + r.size; });
}

int QuantumProgram::num_clbits() const {
  return std::accumulate(cregs.begin(), cregs.end(), 0,
                         [](int acc, const CRegister& r) { return acc + r.size; });
}

QubitRef QuantumProgram::qubit(int logical_id) const {
  for (const auto& r : registers) {
    if (logical_id >= r.base && logical_id < r.base + r.size) {
      return {r.register_id, logical_id - r.base, logical_id};
    }
  }
  throw Error("logical qubit " + std::to_string(logical_id) + " out of range");
}

bool QuantumProgram::is_finalized() const {
  return !ops.empty() && std::holds_alternative<QrtInit>(ops.front()) &&
         std::holds_alternative<QrtFinalize>(ops.back());
}

bool QuantumProgram::has_conditionals() const {
  return std::any_of(ops.begin(), ops.end(), [](const IrOp& op) {
    return std::holds_alternative<ConditionalRegion>(op);
  });
}

namespace {

const QRegister* find_register(const QuantumProgram& p, int id) {
  for (const auto& r : p.registers) {
    if (r.register_id == id) return &r;
  }
  return nullptr;
}

enum class AllocState { Never, Live, Released };

void check_refs(const QuantumProgram& p, const std::vector<QubitRef>& qubits,
                const std::vector<AllocState>& state, const std::string& what) {
  for (const QubitRef& q : qubits) {
    const QRegister* r = find_register(p, q.register_id);
    if (r == nullptr || q.index < 0 || q.index >= r->size ||
        q.logical_id != r->base + q.index) {
      throw Error(what + ": invalid qubit reference");
    }
    if (state[static_cast<std::size_t>(q.register_id)] != AllocState::Live) {
      throw Error(what + ": qubit used outside its allocation");
    }
  }
}

void check_inst(const QuantumProgram& p, const Inst& inst,
                const std::vector<AllocState>& state) {
  check_refs(p, inst.qubits, state, inst.gate);
  for (std::size_t i = 0; i < inst.qubits.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.qubits.size(); ++j) {
      if (inst.qubits[i].logical_id == inst.qubits[j].logical_id) {
        throw Error(inst.gate + ": repeated qubit operand", inst.span);
      }
    }
  }
  const int arity = gate_arity(inst.gate);
  if (arity >= 0 && static_cast<std::size_t>(arity) != inst.qubits.size()) {
    throw Error(inst.gate + ": wrong number of qubit operands", inst.span);
  }
  if (inst.is_measure() != inst.result.has_value()) {
    throw Error(inst.gate + ": only measurements produce results", inst.span);
  }
  if (inst.result) {
    const auto it = std::find_if(
        p.cregs.begin(), p.cregs.end(),
        [&](const CRegister& c) { return c.creg_id == inst.result->creg_id; });
    if (it == p.cregs.end() || inst.result->index < 0 ||
        inst.result->index >= it->size) {
      throw Error("measure: result out of range", inst.span);
    }
  }
}

}  // namespace

void QuantumProgram::validate() const {
  for (std::size_t i = 0; i < registers.size(); ++i) {
    if (registers[i].register_id != static_cast<int>(i) ||
        registers[i].size < 1) {
      throw Error("malformed register table");
    }
  }
  std::vector<AllocState> state(registers.size(), AllocState::Never);
  for (const IrOp& op : ops) {
    if (const auto* a = std::get_if<Qalloc>(&op)) {
      auto& s = state.at(static_cast<std::size_t>(a->register_id));
      if (s != AllocState::Never) throw Error("register allocated twice");
      s = AllocState::Live;
    } else if (const auto* d = std::get_if<Dealloc>(&op)) {
      auto& s = state.at(static_cast<std::size_t>(d->register_id));
      if (s != AllocState::Live) throw Error("register released while not live");
      s = AllocState::Released;
    } else if (const auto* inst = std::get_if<Inst>(&op)) {
      check_inst(*this, *inst, state);
    } else if (const auto* b = std::get_if<Barrier>(&op)) {
      check_refs(*this, b->qubits, state, "barrier");
    } else if (const auto* c = std::get_if<ConditionalRegion>(&op)) {
      check_inst(*this, c->body, state);
      if (std::none_of(cregs.begin(), cregs.end(), [&](const CRegister& r) {
            return r.creg_id == c->creg_id;
          })) {
        throw Error("conditional on unknown creg");
      }
    }
  }
  if (is_finalized()) {
    for (const AllocState s : state) {
      if (s != AllocState::Released) throw Error("register never released");
    }
  }
}

std::size_t count_gates(const QuantumProgram& program) {
  std::size_t n = 0;
  for (const IrOp& op : program.ops) {
    const Inst* inst = std::get_if<Inst>(&op);
    if (const auto* c = std::get_if<ConditionalRegion>(&op)) inst = &c->body;
    if (inst != nullptr && !inst->is_measure() && !inst->is_reset()) ++n;
  }
  return n;
}

ProgramBuilder::ProgramBuilder(int num_qubits, int num_clbits)
    : num_qubits_(num_qubits), num_clbits_(num_clbits) {}

namespace {
std::vector<QubitRef> refs(const std::vector<int>& qubits) {
  std::vector<QubitRef> out;
  out.reserve(qubits.size());
  for (int q : qubits) out.push_back({0, q, q});
  return out;
}
}  // namespace

ProgramBuilder& ProgramBuilder::gate(std::string name, std::vector<int> qubits,
                                     std::vector<double> params) {
  Inst inst;
  inst.gate = std::move(name);
  inst.params = std::move(params);
  inst.qubits = refs(qubits);
  body_.emplace_back(std::move(inst));
  return *this;
}

ProgramBuilder& ProgramBuilder::measure(int qubit, int clbit) {
  Inst inst;
  inst.gate = std::string(kMeasure);
  inst.qubits = refs({qubit});
  inst.result = ResultRef{0, clbit};
  body_.emplace_back(std::move(inst));
  return *this;
}

ProgramBuilder& ProgramBuilder::reset(int qubit) {
  return gate(std::string(kReset), {qubit});
}

ProgramBuilder& ProgramBuilder::barrier(std::vector<int> qubits) {
  body_.emplace_back(Barrier{refs(qubits)});
  return *this;
}

ProgramBuilder& ProgramBuilder::conditional(std::int64_t value, std::string name,
                                            std::vector<int> qubits,
                                            std::vector<double> params) {
  ConditionalRegion region;
  region.creg_id = 0;
  region.value = value;
  region.body.gate = std::move(name);
  region.body.params = std::move(params);
  region.body.qubits = refs(qubits);
  body_.emplace_back(std::move(region));
  return *this;
}

ProgramBuilder& ProgramBuilder::inst(Inst inst) {
  body_.emplace_back(std::move(inst));
  return *this;
}

QuantumProgram ProgramBuilder::build() const {
  std::vector<QRegister> regs;
  if (num_qubits_ > 0) regs.push_back({0, "q", num_qubits_, 0});
  std::vector<CRegister> cregs;
  if (num_clbits_ > 0) cregs.push_back({0, "c", num_clbits_});
  return finalize_program(std::move(regs), std::move(cregs), body_);
}

QuantumProgram finalize_program(std::vector<QRegister> registers,
                                std::vector<CRegister> cregs,
                                std::vector<IrOp> body) {
  QuantumProgram p;
  p.registers = std::move(registers);
  p.cregs = std::move(cregs);
  p.ops.reserve(body.size() + 2 * p.registers.size() + 2);
  p.ops.emplace_back(QrtInit{});
  for (const auto& r : p.registers) p.ops.emplace_back(Qalloc{r.register_id});
  for (auto& op : body) p.ops.push_back(std::move(op));
  for (const auto& r : p.registers) p.ops.emplace_back(Dealloc{r.register_id});
  p.ops.emplace_back(QrtFinalize{});
  return p;
}

std::vector<IrOp> program_body(const QuantumProgram& program) {
  std::vector<IrOp> body;
  body.reserve(program.ops.size());
  for (const IrOp& op : program.ops) {
    if (std::holds_alternative<QrtInit>(op) ||
        std::holds_alternative<QrtFinalize>(op) ||
        std::holds_alternative<Qalloc>(op) ||
        std::holds_alternative<Dealloc>(op) ||
        std::holds_alternative<QubitExtract>(op)) {
      continue;
    }
    body.push_back(op);
  }
  return body;
}

QuantumProgram with_body(const QuantumProgram& program, std::vector<IrOp> body) {
  return finalize_program(program.registers, program.cregs, std::move(body));
}

}  // namespace qcc::ir

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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcc/error.hpp"
#include "qcc/ir/unitary2.hpp"

namespace qcc::ir {

/// Statically resolved handle to one qubit. `logical_id` numbers qubits
/// densely across all registers in declaration order.
struct QubitRef {
  int register_id = 0;
  int index = 0;
  int logical_id = 0;

  friend bool operator==(const QubitRef&, const QubitRef&) = default;
};

struct QRegister {
  int register_id = 0;
  std::string name;
  int size = 1;
  /// logical id of element 0
  int base = 0;
};

struct CRegister {
  int creg_id = 0;
  std::string name;
  int size = 1;
};

struct ResultRef {
  int creg_id = 0;
  int index = 0;

  friend bool operator==(const ResultRef&, const ResultRef&) = default;
};

struct QrtInit {};
struct QrtFinalize {};
struct Qalloc {
  int register_id = 0;
};
struct Dealloc {
  int register_id = 0;
};
/// Only materialized during QIR emission; kept for completeness of the op set.
struct QubitExtract {
  int register_id = 0;
  int index = 0;
};

/// Gate application. Measurement is an Inst named "measure" with a result.
struct Inst {
  std::string gate;
  std::vector<double> params;
  std::vector<QubitRef> qubits;
  std::optional<ResultRef> result;
  /// Only set on the fused_unitary pseudo-gate.
  std::optional<Unitary2> matrix;
  SourceSpan span;

  [[nodiscard]] bool is_measure() const;
  [[nodiscard]] bool is_reset() const;
  /// Unitary gate acting on exactly one qubit (excludes measure and reset).
  [[nodiscard]] bool is_single_qubit_gate() const;
};

struct Barrier {
  std::vector<QubitRef> qubits;
};

/// `if (creg == value) body;`
struct ConditionalRegion {
  int creg_id = 0;
  std::int64_t value = 0;
  Inst body;
};

using IrOp = std::variant<QrtInit, QrtFinalize, Qalloc, Dealloc, QubitExtract,
                          Inst, Barrier, ConditionalRegion>;

/// Straight-line quantum program. A finalized program is laid out as
/// QRTInit, Qalloc..., body..., Dealloc..., QRTFinalize.
struct QuantumProgram {
  std::vector<QRegister> registers;
  std::vector<CRegister> cregs;
  std::vector<IrOp> ops;

  [[nodiscard]] int num_qubits() const;
  [[nodiscard]] int num_clbits() const;
  /// Resolves a logical id back to its register slot.
  [[nodiscard]] QubitRef qubit(int logical_id) const;
  [[nodiscard]] bool is_finalized() const;
  [[nodiscard]] bool has_conditionals() const;

  /// Throws Error when a structural invariant is violated: distinct operands,
  /// gate arity, allocation bracketing, creg bounds.
  void validate() const;
};

/// Number of Inst ops (including conditional bodies) that are not measure or
/// reset.
std::size_t count_gates(const QuantumProgram& program);

/// Convenience builder for single-register programs, used by tests, the
/// benchmark generators and the QIR reconstruction path.
class ProgramBuilder {
 public:
  explicit ProgramBuilder(int num_qubits, int num_clbits = 0);

  ProgramBuilder& gate(std::string name, std::vector<int> qubits,
                       std::vector<double> params = {});
  ProgramBuilder& measure(int qubit, int clbit);
  ProgramBuilder& reset(int qubit);
  ProgramBuilder& barrier(std::vector<int> qubits);
  ProgramBuilder& conditional(std::int64_t value, std::string name,
                              std::vector<int> qubits,
                              std::vector<double> params = {});
  ProgramBuilder& inst(Inst inst);

  [[nodiscard]] QuantumProgram build() const;

 private:
  int num_qubits_;
  int num_clbits_;
  std::vector<IrOp> body_;
};

/// Wraps `body` with init/alloc and dealloc/finalize for `registers`.
QuantumProgram finalize_program(std::vector<QRegister> registers,
                                std::vector<CRegister> cregs,
                                std::vector<IrOp> body);

/// The ops strictly between the last Qalloc and the first Dealloc.
std::vector<IrOp> program_body(const QuantumProgram& program);

/// Same registers, new body.
QuantumProgram with_body(const QuantumProgram& program, std::vector<IrOp> body);

}  // namespace qcc::ir

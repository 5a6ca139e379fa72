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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcc/ir/dag.hpp"
#include "qcc/ir/program.hpp"

namespace qcc::extract {

/// One `define` whose body calls at least one `__quantum__qis__` function.
struct KernelFunction {
  std::string name;
  /// From the `define` line through the closing brace.
  std::string text;
  /// 1-based line of the `define` in the module.
  int first_line = 1;
};

std::vector<KernelFunction> find_quantum_kernels(std::string_view module_text);

struct QirValueMap {
  /// SSA name (without `%`) of an extracted qubit handle -> logical qubit.
  std::map<std::string, int> bindings;
  /// SSA name of an allocated array -> (base logical id, size).
  std::map<std::string, std::pair<int, int>> array_bindings;
};

struct ExtractedGate {
  /// SingleQubit, TwoQubit, MultiQubit (ccx and friends) or Measure.
  ir::NodeKind kind = ir::NodeKind::SingleQubit;
  /// QIS name with the `__quantum__qis__` prefix and `__body` suffix removed;
  /// `m` and `mz` are reported as "measure".
  std::string name;
  std::vector<double> params;
  std::vector<int> operands;
  int origin_line = 0;
  /// Creg bit the measurement is recorded into, from the module header.
  std::optional<ir::ResultRef> result;
};

struct ExtractedCircuit {
  std::vector<ExtractedGate> gates;
  ir::GateDag dag;
  QirValueMap values;
  int num_qubits = 0;
  /// Allocation sizes in order.
  std::vector<int> registers;
  /// Barriers as (number of gates preceding it, logical qubits).
  std::vector<std::pair<std::size_t, std::vector<int>>> barriers;
};

/// Classical register layout recorded in the `; qcc.cregs:` and
/// `; qcc.results:` header comments. Empty when absent.
struct ResultLayout {
  std::vector<std::pair<std::string, int>> cregs;
  /// Per measurement, in textual order.
  std::vector<ir::ResultRef> results;
};

ResultLayout parse_result_layout(std::string_view module_text);

/**
 * @brief Recovers the gate list and dependency DAG of one kernel.
 *
 * Logical ids are assigned densely in allocation order and are never reused.
 * `; barrier` comments written by the emitter become barrier nodes of the DAG.
 * Throws ExtractionError on untraceable qubit operands, unknown intrinsics or
 * any control-flow instruction.
 */
/// `first_line` is the module line of the kernel's first line, used for
/// `origin_line`.
ExtractedCircuit extract_circuit(std::string_view kernel_text,
                                 const ResultLayout& layout = {}, int first_line = 1);

/// Rebuilds a single-register program from an extraction.
ir::QuantumProgram to_program(const ExtractedCircuit& circuit,
                              const ResultLayout& layout = {});

/// Gate list as a JSON array (for `qcc extract`).
std::string gates_to_json(const std::vector<ExtractedGate>& gates);

}  // namespace qcc::extract

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
#include "qcc/ir/metrics.hpp"

#include <nlohmann/json.hpp>

#include "qcc/ir/dag.hpp"
#include "qcc/ir/gate_table.hpp"

namespace qcc::ir {

GateCounts gate_counts(const QuantumProgram& program) {
  GateCounts counts;
  for (const IrOp& op : program.ops) {
    const Inst* inst = std::get_if<Inst>(&op);
    if (const auto* c = std::get_if<ConditionalRegion>(&op)) inst = &c->body;
    if (inst == nullptr || inst->is_reset()) continue;
    if (inst->is_measure()) {
      ++counts.measure_ops;
      continue;
    }
    ++counts.total_gates;
    if (inst->qubits.size() == 1) ++counts.single_qubit_gates;
    if (inst->qubits.size() == 2) ++counts.two_qubit_gates;
    if (inst->gate == kSwap) ++counts.swap_gates;
  }
  counts.depth = circuit_depth(build_dag(program));
  return counts;
}

std::string to_json(const GateCounts& counts, int indent) {
  nlohmann::ordered_json j;
  j["total_gates"] = counts.total_gates;
  j["single_qubit_gates"] = counts.single_qubit_gates;
  j["two_qubit_gates"] = counts.two_qubit_gates;
  j["swap_gates"] = counts.swap_gates;
  j["measure_ops"] = counts.measure_ops;
  j["depth"] = counts.depth;
  return j.dump(indent);
}

}  // namespace qcc::ir

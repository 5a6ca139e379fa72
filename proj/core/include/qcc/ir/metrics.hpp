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

#include <string>

#include "qcc/ir/program.hpp"

namespace qcc::ir {

/// Circuit size metrics. Barriers, allocation and runtime ops are never
/// counted; measurements are reported in `measure_ops` only. Swaps count both
/// as two-qubit gates and in `swap_gates`. `depth` counts measurements as
/// unit-weight nodes.
struct GateCounts {
  int total_gates = 0;
  int single_qubit_gates = 0;
  int two_qubit_gates = 0;
  int swap_gates = 0;
  int measure_ops = 0;
  int depth = 0;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts gate_counts(const QuantumProgram& program);

/// JSON object with exactly the six GateCounts keys, in declaration order.
std::string to_json(const GateCounts& counts, int indent = 2);

}  // namespace qcc::ir

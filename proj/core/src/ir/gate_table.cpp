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
#include "qcc/ir/gate_table.hpp"

#include <algorithm>
#include <array>

namespace qcc::ir {
namespace {

constexpr std::array<GateInfo, 24> kPrimitives{{
    {"u1", 1, 1},  {"u2", 2, 1},  {"u3", 3, 1},  {"cx", 0, 2},
    {"id", 0, 1},  {"x", 0, 1},   {"y", 0, 1},   {"z", 0, 1},
    {"h", 0, 1},   {"s", 0, 1},   {"sdg", 0, 1}, {"t", 0, 1},
    {"tdg", 0, 1}, {"rx", 1, 1},  {"ry", 1, 1},  {"rz", 1, 1},
    {"cz", 0, 2},  {"cy", 0, 2},  {"ch", 0, 2},  {"ccx", 0, 3},
    {"crz", 1, 2}, {"cu1", 1, 2}, {"cu3", 3, 2}, {"swap", 0, 2},
}};

}  // namespace

std::span<const GateInfo> primitive_gates() { return kPrimitives; }

const GateInfo* find_primitive(std::string_view name) {
  const auto* it =
      std::find_if(kPrimitives.begin(), kPrimitives.end(),
                   [&](const GateInfo& g) { return g.name == name; });
  return it == kPrimitives.end() ? nullptr : it;
}

int gate_arity(std::string_view name) {
  if (name == kMeasure || name == kReset || name == kFusedUnitary) return 1;
  const GateInfo* info = find_primitive(name);
  return info ? info->num_qubits : -1;
}

}  // namespace qcc::ir

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

#include <span>
#include <string_view>

namespace qcc::ir {

/// Static description of a primitive gate from the standard library table.
struct GateInfo {
  std::string_view name;
  int num_params = 0;
  int num_qubits = 1;
};

inline constexpr std::string_view kMeasure = "measure";
inline constexpr std::string_view kReset = "reset";
inline constexpr std::string_view kSwap = "swap";
/// Internal single-qubit pseudo-gate produced by run fusion; carries a matrix.
inline constexpr std::string_view kFusedUnitary = "fused_unitary";

/// The qelib1 primitives: u1,u2,u3,cx,id,x,y,z,h,s,sdg,t,tdg,rx,ry,rz,
/// cz,cy,ch,ccx,crz,cu1,cu3,swap.
std::span<const GateInfo> primitive_gates();

/// nullptr when `name` is not a qelib1 primitive.
const GateInfo* find_primitive(std::string_view name);

/// Number of qubit operands a gate name takes, including measure/reset and
/// the fused pseudo-gate; -1 for unknown names.
int gate_arity(std::string_view name);

}  // namespace qcc::ir

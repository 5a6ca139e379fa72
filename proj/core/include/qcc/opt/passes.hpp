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
#include <vector>

#include "qcc/ir/program.hpp"
#include "qcc/opt/euler.hpp"
#include "qcc/opt/native_gates.hpp"

namespace qcc::opt {

/// One rotation produced by resynthesis.
struct RotationGate {
  std::string name;
  double angle = 0.0;

  friend bool operator==(const RotationGate&, const RotationGate&) = default;
};

/// Pruned rotation list (time order) of one basis decomposition: zero angles
/// dropped, newly adjacent same-axis rotations merged.
std::vector<RotationGate> pruned_rotations(const EulerDecomposition& d,
                                           double zero_tol = 1e-10);

/**
 * @brief Shortest native rotation sequence for `u` among ZYZ, ZXZ and XYX.
 *
 * Each basis is tried in its direct form and in the equivalent form with
 * both outer angles shifted by pi and the inner angle negated. Ties break in
 * the order ZYZ, ZXZ, XYX. Global phase is discarded. Throws
 * NoValidBasis when no basis maps into `native`.
 */
std::vector<RotationGate> select_decomposition(const ir::Unitary2& u,
                                               const NativeGateSet& native);

/// Replaces every maximal run (length >= 2) of single-qubit gates on one
/// qubit with a fused_unitary pseudo-gate carrying the run's product. Runs are
/// fenced by any other op touching the qubit.
ir::QuantumProgram fuse_single_qubit_runs(const ir::QuantumProgram& program);

/// Fuses runs and resynthesizes each with select_decomposition, keeping the
/// original run whenever the rewrite would not be strictly shorter.
ir::QuantumProgram fuse_and_resynthesize(const ir::QuantumProgram& program,
                                         const NativeGateSet& native);

/// Rewrites every gate outside `native` into native gates. Multi-qubit gates
/// expand through their standard library bodies, single-qubit gates through
/// select_decomposition. Throws UnsupportedGate for anything else.
ir::QuantumProgram decompose_unsupported(const ir::QuantumProgram& program,
                                         const NativeGateSet& native);

/// Removes adjacent pairs of identical self-inverse two-qubit gates
/// (cx, cz, swap) acting on the same operands.
ir::QuantumProgram cancel_two_qubit_pairs(const ir::QuantumProgram& program);

/**
 * @brief Optimization pipeline.
 *
 * Level 0 only decomposes. Level 1 adds fusion plus resynthesis iterated to a
 * fixpoint (at most 10 rounds). Level 2 runs two-qubit pair cancellation once
 * and then the level-1 loop again. Level 3 alternates cancellation and the
 * level-1 loop until neither changes the program (at most 10 rounds).
 */
ir::QuantumProgram optimize(const ir::QuantumProgram& program, int level,
                            const NativeGateSet& native = NativeGateSet{});

}  // namespace qcc::opt

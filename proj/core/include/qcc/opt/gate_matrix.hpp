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

#include "qcc/ir/unitary2.hpp"

namespace qcc::opt {

/// Rz(t) = diag(e^{-it/2}, e^{it/2}).
ir::Unitary2 rz_matrix(double theta);
/// Ry(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
ir::Unitary2 ry_matrix(double theta);
/// Rx(t) = cos(t/2) I - i sin(t/2) X.
ir::Unitary2 rx_matrix(double theta);

/// Matrix of a single-qubit primitive. Throws UnknownGate otherwise.
ir::Unitary2 gate_matrix(std::string_view gate, std::span<const double> params);

/// For controlled primitives (cx, cy, cz, ch, crz, cu1, cu3) the name of the
/// single-qubit gate applied to the target; empty otherwise.
std::string_view controlled_base(std::string_view gate);

}  // namespace qcc::opt

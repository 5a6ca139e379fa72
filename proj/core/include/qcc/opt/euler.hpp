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

#include <string_view>

#include "qcc/ir/unitary2.hpp"

namespace qcc::opt {

/// Axis pairs, listed in tie-break order.
enum class EulerBasis { ZYZ, ZXZ, XYX };

inline constexpr EulerBasis kAllBases[] = {EulerBasis::ZYZ, EulerBasis::ZXZ,
                                           EulerBasis::XYX};

std::string_view to_string(EulerBasis basis);

/// U = e^{i global_phase} R_outer(beta) R_inner(gamma) R_outer(delta).
/// In time order the rotations are applied delta first, beta last.
struct EulerDecomposition {
  EulerBasis basis = EulerBasis::ZYZ;
  double global_phase = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

/// Rotation gate names ("rz", "ry", "rx") of the outer and inner axes.
std::string_view outer_axis(EulerBasis basis);
std::string_view inner_axis(EulerBasis basis);

/// gamma lies in [0, pi] for every basis. Throws NotUnitary when
/// `u.unitarity_error()` exceeds `tolerance`.
EulerDecomposition euler_decompose(const ir::Unitary2& u, EulerBasis basis,
                                   double tolerance = 1e-10);

ir::Unitary2 reconstruct(const EulerDecomposition& d);

/// Maps an angle into (-pi, pi].
double normalize_angle(double theta);

}  // namespace qcc::opt

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
#include "qcc/ir/unitary2.hpp"

#include <algorithm>
#include <cmath>

namespace qcc::ir {

double Unitary2::unitarity_error() const {
  const Unitary2 p = adjoint() * *this;
  double sum = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const Complex expected = (r == c) ? Complex{1.0} : Complex{0.0};
      sum += std::norm(p(r, c) - expected);
    }
  }
  return std::sqrt(sum);
}

double max_abs_diff(const Unitary2& a, const Unitary2& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
  }
  return worst;
}

double phase_insensitive_distance(const Unitary2& a, const Unitary2& b) {
  // tr(b^dagger a) = |tr| e^{i phi}; rotating a by e^{-i phi} aligns it with b.
  Complex overlap{0.0};
  for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(b.m[i]) * a.m[i];
  const Complex phase =
      std::abs(overlap) > 0.0 ? std::conj(overlap) / std::abs(overlap)
                              : Complex{1.0};
  return max_abs_diff(phase * a, b);
}

}  // namespace qcc::ir

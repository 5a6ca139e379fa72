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

#include <array>
#include <complex>

namespace qcc::ir {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix, row-major. Used for single-qubit operators.
struct Unitary2 {
  std::array<Complex, 4> m{Complex{1.0}, Complex{0.0}, Complex{0.0},
                           Complex{1.0}};

  static Unitary2 identity() { return {}; }
  static Unitary2 from(Complex a, Complex b, Complex c, Complex d) {
    Unitary2 u;
    u.m = {a, b, c, d};
    return u;
  }

  [[nodiscard]] Complex operator()(int row, int col) const {
    return m[static_cast<std::size_t>(row * 2 + col)];
  }
  Complex& operator()(int row, int col) {
    return m[static_cast<std::size_t>(row * 2 + col)];
  }

  [[nodiscard]] Unitary2 adjoint() const {
    return from(std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
                std::conj(m[3]));
  }
  [[nodiscard]] Complex determinant() const { return m[0] * m[3] - m[1] * m[2]; }

  friend Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
    return from(a.m[0] * b.m[0] + a.m[1] * b.m[2],
                a.m[0] * b.m[1] + a.m[1] * b.m[3],
                a.m[2] * b.m[0] + a.m[3] * b.m[2],
                a.m[2] * b.m[1] + a.m[3] * b.m[3]);
  }
  friend Unitary2 operator*(Complex s, const Unitary2& a) {
    return from(s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]);
  }

  /// Frobenius norm of U^dagger U - I.
  [[nodiscard]] double unitarity_error() const;
  [[nodiscard]] bool is_unitary(double tol = 1e-10) const {
    return unitarity_error() <= tol;
  }
};

/// Largest entry-wise modulus of a - b.
double max_abs_diff(const Unitary2& a, const Unitary2& b);

/// Entry-wise distance after removing the best global phase between a and b.
double phase_insensitive_distance(const Unitary2& a, const Unitary2& b);

}  // namespace qcc::ir

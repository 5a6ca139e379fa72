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

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "qcc/extract/extractor.hpp"
#include "qcc/ir/program.hpp"
#include "qcc/ir/unitary2.hpp"

namespace qcc::sim {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 20;

/**
 * @brief Dense pure state over n qubits.
 *
 * Qubit 0 is the least significant bit of the amplitude index, so the
 * amplitude of |q_{n-1} ... q_1 q_0> lives at index sum(q_k << k).
 */
class StateVector {
 public:
  /// |0...0>. Throws OracleError when n is negative or above kMaxQubits.
  explicit StateVector(int n);
  StateVector(int n, std::vector<Complex> amplitudes);

  [[nodiscard]] int num_qubits() const noexcept { return n_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
  [[nodiscard]] const std::vector<Complex>& amplitudes() const noexcept { return amps_; }
  [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }
  [[nodiscard]] double norm() const;

  void apply_1q(const ir::Unitary2& u, int target);
  /// Applies `u` to `target` on the subspace where every control is 1.
  void apply_controlled(const ir::Unitary2& u, std::span<const int> controls, int target);
  void apply_swap(int a, int b);

  /// Applies a named primitive (or the matrix of a fused gate).
  void apply_gate(std::string_view name, std::span<const double> params,
                  std::span<const int> qubits, const ir::Unitary2* matrix = nullptr);

 private:
  void check_qubit(int q) const;

  int n_ = 0;
  std::vector<Complex> amps_;
};

/// Runs the unitary part of a program from |0...0>; `n` defaults to the
/// program's qubit count. Throws OracleError on measure, reset or conditional
/// ops unless `ignore_measurements` is set, in which case they are skipped.
StateVector simulate(const ir::QuantumProgram& program, int n = -1,
                     bool ignore_measurements = false);
StateVector simulate(const std::vector<extract::ExtractedGate>& gates, int n,
                     bool ignore_measurements = false);

/// |<a|b>| >= 1 - tol. Throws DimensionMismatch.
bool equiv_up_to_global_phase(const StateVector& a, const StateVector& b, double tol = 1e-9);

/// Bit k of every index moves to bit perm[k]. Throws InvalidPermutation.
StateVector permute_qubits(const StateVector& v, std::span<const int> perm);

/// Same amplitudes over more qubits; the added qubits are |0>.
StateVector pad_qubits(const StateVector& v, int n);

}  // namespace qcc::sim

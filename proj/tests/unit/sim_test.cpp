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
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qcc/error.hpp"
#include "qcc/ir/gate_table.hpp"
#include "qcc/sim/statevector.hpp"
#include "test_support.hpp"

namespace qcc::sim {
namespace {

using ir::ProgramBuilder;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

TEST(simulate, bell_state) {
  const auto s = simulate(ProgramBuilder(2).gate("h", {0}).gate("cx", {0, 1}).build());
  EXPECT_NEAR(std::abs(s[0] - Complex(kInvSqrt2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s[3] - Complex(kInvSqrt2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s[1]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s[2]), 0.0, 1e-12);
}

TEST(simulate, qubit_zero_is_least_significant) {
  const auto s = simulate(ProgramBuilder(3).gate("x", {1}).build());
  EXPECT_NEAR(std::abs(s[2]), 1.0, 1e-12);
}

TEST(simulate, x_then_cx_flips_target) {
  const auto s = simulate(ProgramBuilder(2).gate("x", {0}).gate("cx", {0, 1}).build());
  EXPECT_NEAR(std::abs(s[3]), 1.0, 1e-12);
}

TEST(simulate, ccx_needs_both_controls) {
  EXPECT_NEAR(std::abs(simulate(ProgramBuilder(3).gate("x", {0}).gate("ccx", {0, 1, 2}).build())[1]), 1.0,
              1e-12);
  EXPECT_NEAR(
      std::abs(simulate(ProgramBuilder(3).gate("x", {0}).gate("x", {1}).gate("ccx", {0, 1, 2}).build())[7]),
      1.0, 1e-12);
}

TEST(simulate, swap_moves_excitation) {
  const auto s = simulate(ProgramBuilder(2).gate("x", {0}).gate("swap", {0, 1}).build());
  EXPECT_NEAR(std::abs(s[2]), 1.0, 1e-12);
}

TEST(simulate, measurements_need_opt_in) {
  const auto p = ProgramBuilder(1, 1).gate("h", {0}).measure(0, 0).build();
  EXPECT_THROW(simulate(p), OracleError);
  const auto s = simulate(p, -1, true);
  EXPECT_NEAR(std::abs(s[0]), kInvSqrt2, 1e-12);
}

TEST(simulate, explicit_width_pads) {
  const auto s = simulate(ProgramBuilder(1).gate("x", {0}).build(), 3);
  EXPECT_EQ(s.dimension(), 8U);
  EXPECT_NEAR(std::abs(s[1]), 1.0, 1e-12);
}

TEST(state_vector, limits) {
  EXPECT_THROW(StateVector(kMaxQubits + 1), OracleError);
  EXPECT_THROW(StateVector(-1), OracleError);
  StateVector s(2);
  EXPECT_THROW(s.apply_1q(ir::Unitary2::identity(), 2), OracleError);
}

TEST(state_vector, norm_is_preserved) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = simulate(testing::random_circuit(rng, 5, 80));
    EXPECT_NEAR(s.norm(), 1.0, 1e-10);
  }
}

TEST(state_vector, gate_times_inverse_is_identity) {
  // each primitive followed by its adjoint (built from the conjugate matrix)
  std::mt19937_64 rng(6);
  const auto start = simulate(testing::random_circuit(rng, 3, 20));
  for (const auto& info : ir::primitive_gates()) {
    const std::string name(info.name);
    if (name == "measure" || name == "reset" || name == "fused_unitary" || info.num_qubits != 1) continue;
    const std::vector<double> params(static_cast<std::size_t>(info.num_params), 0.7);
    StateVector s = start;
    const std::vector<int> q = {1};
    s.apply_gate(name, params, q);
    StateVector probe(1);
    probe.apply_gate(name, params, std::vector<int>{0});
    StateVector probe1(1, {Complex(0), Complex(1)});
    probe1.apply_gate(name, params, std::vector<int>{0});
    const auto u = ir::Unitary2::from(probe[0], probe1[0], probe[1], probe1[1]);
    s.apply_1q(u.adjoint(), 1);
    EXPECT_TRUE(equiv_up_to_global_phase(s, start, 1e-12)) << name;
  }
  for (const char* name : {"cx", "cz", "swap", "ccx"}) {
    StateVector s = start;
    const std::vector<int> q = name == std::string("ccx") ? std::vector<int>{2, 0, 1} : std::vector<int>{2, 0};
    s.apply_gate(name, {}, q);
    s.apply_gate(name, {}, q);
    EXPECT_TRUE(equiv_up_to_global_phase(s, start, 1e-12)) << name;
  }
}

TEST(state_vector, agrees_with_dense_operator) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto p = testing::random_circuit(rng, n, 1 + static_cast<int>(rng() % 30));
    const auto s = simulate(p);
    const auto u = testing::dense_unitary(p);
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      EXPECT_NEAR(std::abs(s[i] - u(static_cast<Eigen::Index>(i), 0)), 0.0, 1e-10) << trial;
    }
  }
}

TEST(equiv_up_to_global_phase, phase_and_dimension) {
  StateVector a(1, {Complex(kInvSqrt2), Complex(kInvSqrt2)});
  const Complex ph = std::polar(1.0, 0.9);
  StateVector b(1, {ph * kInvSqrt2, ph * kInvSqrt2});
  StateVector c(1, {Complex(kInvSqrt2), Complex(-kInvSqrt2)});
  EXPECT_TRUE(equiv_up_to_global_phase(a, b));
  EXPECT_FALSE(equiv_up_to_global_phase(a, c));
  EXPECT_THROW(equiv_up_to_global_phase(a, StateVector(2)), DimensionMismatch);
}

TEST(permute_qubits, moves_bits) {
  const auto s = simulate(ProgramBuilder(3).gate("x", {0}).build());
  const std::vector<int> perm = {2, 0, 1};
  const auto t = permute_qubits(s, perm);
  EXPECT_NEAR(std::abs(t[4]), 1.0, 1e-12);
  EXPECT_THROW(permute_qubits(s, std::vector<int>{0, 0, 1}), InvalidPermutation);
  EXPECT_THROW(permute_qubits(s, std::vector<int>{0, 1}), InvalidPermutation);
}

TEST(permute_qubits, matches_relabelled_circuit) {
  std::mt19937_64 rng(21);
  const std::vector<int> perm = {1, 3, 0, 2};
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testing::random_circuit(rng, 4, 25);
    ir::ProgramBuilder b(4);
    for (const auto& op : ir::program_body(p)) {
      const auto& g = std::get<ir::Inst>(op);
      std::vector<int> qs;
      for (const auto& q : g.qubits) qs.push_back(perm[static_cast<std::size_t>(q.logical_id)]);
      b.gate(g.gate, qs, g.params);
    }
    EXPECT_TRUE(equiv_up_to_global_phase(permute_qubits(simulate(p), perm), simulate(b.build()), 1e-10));
  }
}

TEST(pad_qubits, appends_zero_qubits) {
  const auto s = simulate(ProgramBuilder(1).gate("x", {0}).build());
  const auto t = pad_qubits(s, 3);
  EXPECT_EQ(t.num_qubits(), 3);
  EXPECT_NEAR(std::abs(t[1]), 1.0, 1e-12);
}

}  // namespace
}  // namespace qcc::sim

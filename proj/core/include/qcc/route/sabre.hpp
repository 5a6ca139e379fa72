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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/ir/dag.hpp"
#include "qcc/ir/program.hpp"
#include "qcc/route/coupling.hpp"
#include "qcc/route/layout.hpp"

namespace qcc::route {

struct SabreConfig {
  /// Weight of the look-ahead term.
  double extended_weight = 0.5;
  /// Cap on the number of two-qubit successors in the look-ahead set.
  std::size_t extended_set_size = 20;
  /// Multiplicative penalty per recent use of a physical qubit.
  double decay_factor = 1.001;
  /// Number of swap rounds after which the penalties reset.
  int decay_reset_interval = 5;
};

struct RoutedGate {
  /// Qubits are physical indices.
  ir::DagNode node;
  bool routing_inserted = false;
};

struct RoutingResult {
  std::vector<RoutedGate> routed_gates;
  Layout initial_layout;
  Layout final_layout;
  int swap_count = 0;
};

/**
 * @brief Front-layer SWAP routing of `dag` onto `graph`.
 *
 * Candidate swaps are the coupling edges touching a physical qubit that hosts
 * an operand of a blocked front-layer gate; the cheapest under the look-ahead
 * cost wins, ties going to the lexicographically smallest edge. When many
 * swaps pass without any gate becoming executable, the first blocked gate is
 * routed along a shortest path so the pass always terminates.
 *
 * `seed` is accepted for interface symmetry; the pass itself is deterministic.
 */
RoutingResult sabre_swap(const ir::GateDag& dag, const Layout& initial,
                         const CouplingGraph& graph, std::uint64_t seed = 0,
                         const SabreConfig& config = {});

/// Alternating forward/reverse refinement of a seeded random placement.
Layout sabre_layout(const ir::GateDag& dag, const CouplingGraph& graph, int iterations = 3,
                    std::uint64_t seed = 0, const SabreConfig& config = {});

/// Seeded permutation of the physical qubits; its first n_logical entries
/// form the starting placement of sabre_layout.
Layout random_layout(int n_logical, int n_physical, std::uint64_t seed);

struct RouteOptions {
  /// Forced initial placement; SabreLayout runs when empty.
  std::optional<Layout> layout;
  std::uint64_t seed = 0;
  int sabre_iterations = 3;
  SabreConfig config;
};

struct RoutedProgram {
  /// Single register over the physical qubits.
  ir::QuantumProgram program;
  RoutingResult routing;
};

/// Throws CapacityError when the program needs more qubits than the device
/// and RoutingError for multi-qubit gates or conditional regions whose body
/// is not a single-qubit operation.
RoutedProgram route_program(const ir::QuantumProgram& program, const CouplingGraph& graph,
                            const RouteOptions& options = {});

/// Routes the single quantum kernel of a QIR module and re-emits it.
std::string route_qir(std::string_view module_text, const CouplingGraph& graph,
                      const RouteOptions& options = {});

}  // namespace qcc::route

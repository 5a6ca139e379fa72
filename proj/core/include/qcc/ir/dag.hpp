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

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcc/ir/program.hpp"

namespace qcc::ir {

enum class NodeKind { SingleQubit, TwoQubit, MultiQubit, Measure, Barrier };

const char* to_string(NodeKind kind);

struct DagNode {
  NodeKind kind = NodeKind::SingleQubit;
  std::string name;
  std::vector<double> params;
  /// Logical qubit ids.
  std::vector<int> qubits;
  /// Index of the originating op (program ops or extracted gate list).
  std::size_t origin = 0;
  /// creg id when the node is a classically conditioned gate.
  std::optional<int> condition_creg;
};

/**
 * @brief Dependency graph over gate instances.
 *
 * Nodes are stored in program order, which is also a topological order.
 * Each node depends on the previous node on every qubit it touches. Barrier
 * nodes participate in the dependency structure but have zero depth weight.
 * Conditioned gates additionally depend on measurements into their creg.
 */
class GateDag {
 public:
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] bool empty() const noexcept { return nodes_.empty(); }
  /// Nodes excluding barriers.
  [[nodiscard]] std::size_t gate_count() const;
  [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }

  [[nodiscard]] const DagNode& node(std::size_t i) const { return nodes_[i]; }
  [[nodiscard]] const std::vector<DagNode>& nodes() const noexcept {
    return nodes_;
  }
  [[nodiscard]] const std::vector<int>& successors(std::size_t i) const {
    return succ_[i];
  }
  [[nodiscard]] const std::vector<int>& predecessors(std::size_t i) const {
    return pred_[i];
  }
  /// (from, to) pairs sorted lexicographically.
  [[nodiscard]] std::vector<std::pair<int, int>> edges() const;
  /// Nodes with in-degree zero, ascending.
  [[nodiscard]] std::vector<int> front_layer() const;
  /// Last node acting on each logical qubit, -1 where none.
  [[nodiscard]] const std::vector<int>& last_gate_on_qubit() const noexcept {
    return last_on_qubit_;
  }

  /// Same gates in reverse program order with every edge flipped.
  [[nodiscard]] GateDag reversed() const;

 private:
  friend class DagBuilder;

  int num_qubits_ = 0;
  std::vector<DagNode> nodes_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  std::vector<int> last_on_qubit_;
};

/// Incremental def-use chaining; nodes must be added in program order.
class DagBuilder {
 public:
  explicit DagBuilder(int num_qubits, std::vector<int> creg_sizes = {});

  /// `writes` is the classical bit a measurement stores into.
  int add(DagNode node, std::optional<ResultRef> writes = std::nullopt);

  GateDag finish() &&;

 private:
  void add_edge(int from, int to);

  GateDag dag_;
  std::vector<std::vector<int>> bit_writer_;
  std::vector<std::vector<int>> readers_;
};

/// One node per Inst (measures included), conditional region and barrier.
GateDag build_dag(const QuantumProgram& program);

/// Longest path in nodes, unit weight per gate and measure, zero for barriers.
int circuit_depth(const GateDag& dag);

}  // namespace qcc::ir

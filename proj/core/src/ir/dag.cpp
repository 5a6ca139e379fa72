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
#include "qcc/ir/dag.hpp"

#include <algorithm>

namespace qcc::ir {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::SingleQubit:
      return "single-qubit";
    case NodeKind::TwoQubit:
      return "two-qubit";
    case NodeKind::MultiQubit:
      return "multi-qubit";
    case NodeKind::Measure:
      return "measure";
    case NodeKind::Barrier:
      return "barrier";
  }
  return "unknown";
}

std::size_t GateDag::gate_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const DagNode& n) {
        return n.kind != NodeKind::Barrier;
      }));
}

std::vector<std::pair<int, int>> GateDag::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < succ_.size(); ++i) {
    for (int j : succ_[i]) out.emplace_back(static_cast<int>(i), j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> GateDag::front_layer() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (pred_[i].empty()) out.push_back(static_cast<int>(i));
  }
  return out;
}

GateDag GateDag::reversed() const {
  const int n = static_cast<int>(nodes_.size());
  GateDag r;
  r.num_qubits_ = num_qubits_;
  r.nodes_.assign(nodes_.rbegin(), nodes_.rend());
  r.succ_.resize(nodes_.size());
  r.pred_.resize(nodes_.size());
  for (int i = 0; i < n; ++i) {
    const int ri = n - 1 - i;
    for (int j : succ_[static_cast<std::size_t>(i)]) {
      r.pred_[static_cast<std::size_t>(ri)].push_back(n - 1 - j);
    }
    for (int j : pred_[static_cast<std::size_t>(i)]) {
      r.succ_[static_cast<std::size_t>(ri)].push_back(n - 1 - j);
    }
  }
  for (auto& v : r.succ_) std::sort(v.begin(), v.end());
  for (auto& v : r.pred_) std::sort(v.begin(), v.end());
  r.last_on_qubit_.assign(static_cast<std::size_t>(num_qubits_), -1);
  for (int i = 0; i < n; ++i) {
    for (int q : r.nodes_[static_cast<std::size_t>(i)].qubits) {
      r.last_on_qubit_[static_cast<std::size_t>(q)] = i;
    }
  }
  return r;
}

DagBuilder::DagBuilder(int num_qubits, std::vector<int> creg_sizes) {
  dag_.num_qubits_ = num_qubits;
  dag_.last_on_qubit_.assign(static_cast<std::size_t>(num_qubits), -1);
  for (int size : creg_sizes) {
    bit_writer_.emplace_back(static_cast<std::size_t>(size), -1);
  }
  readers_.resize(creg_sizes.size());
}

void DagBuilder::add_edge(int from, int to) {
  auto& succ = dag_.succ_[static_cast<std::size_t>(from)];
  if (std::find(succ.begin(), succ.end(), to) != succ.end()) return;
  succ.push_back(to);
  dag_.pred_[static_cast<std::size_t>(to)].push_back(from);
}

int DagBuilder::add(DagNode node, std::optional<ResultRef> writes) {
  const int id = static_cast<int>(dag_.nodes_.size());
  dag_.succ_.emplace_back();
  dag_.pred_.emplace_back();
  for (int q : node.qubits) {
    auto& last = dag_.last_on_qubit_.at(static_cast<std::size_t>(q));
    if (last >= 0) add_edge(last, id);
    last = id;
  }
  // Classical dependencies: a conditioned gate reads the whole creg, a
  // measurement writes one bit of it.
  if (node.condition_creg) {
    const auto c = static_cast<std::size_t>(*node.condition_creg);
    for (int w : bit_writer_.at(c)) {
      if (w >= 0) add_edge(w, id);
    }
    readers_[c].push_back(id);
  }
  if (writes) {
    const auto c = static_cast<std::size_t>(writes->creg_id);
    auto& writer = bit_writer_.at(c).at(static_cast<std::size_t>(writes->index));
    if (writer >= 0) add_edge(writer, id);
    for (int r : readers_[c]) add_edge(r, id);
    writer = id;
  }
  dag_.nodes_.push_back(std::move(node));
  return id;
}

GateDag DagBuilder::finish() && {
  for (auto& v : dag_.pred_) std::sort(v.begin(), v.end());
  for (auto& v : dag_.succ_) std::sort(v.begin(), v.end());
  return std::move(dag_);
}

namespace {

NodeKind kind_of(const Inst& inst) {
  if (inst.is_measure()) return NodeKind::Measure;
  switch (inst.qubits.size()) {
    case 1:
      return NodeKind::SingleQubit;
    case 2:
      return NodeKind::TwoQubit;
    default:
      return NodeKind::MultiQubit;
  }
}

DagNode node_of(const Inst& inst, std::size_t origin) {
  DagNode n;
  n.kind = kind_of(inst);
  n.name = inst.gate;
  n.params = inst.params;
  n.origin = origin;
  for (const auto& q : inst.qubits) n.qubits.push_back(q.logical_id);
  return n;
}

}  // namespace

GateDag build_dag(const QuantumProgram& program) {
  std::vector<int> creg_sizes;
  for (const auto& c : program.cregs) creg_sizes.push_back(c.size);
  DagBuilder builder(program.num_qubits(), creg_sizes);
  for (std::size_t i = 0; i < program.ops.size(); ++i) {
    const IrOp& op = program.ops[i];
    if (const auto* inst = std::get_if<Inst>(&op)) {
      builder.add(node_of(*inst, i), inst->result);
    } else if (const auto* c = std::get_if<ConditionalRegion>(&op)) {
      DagNode n = node_of(c->body, i);
      n.condition_creg = c->creg_id;
      builder.add(std::move(n), c->body.result);
    } else if (const auto* b = std::get_if<Barrier>(&op)) {
      DagNode n;
      n.kind = NodeKind::Barrier;
      n.name = "barrier";
      n.origin = i;
      for (const auto& q : b->qubits) n.qubits.push_back(q.logical_id);
      builder.add(std::move(n));
    }
  }
  return std::move(builder).finish();
}

int circuit_depth(const GateDag& dag) {
  std::vector<int> level(dag.size(), 0);
  int depth = 0;
  for (std::size_t i = 0; i < dag.size(); ++i) {
    int before = 0;
    for (int p : dag.predecessors(i)) {
      before = std::max(before, level[static_cast<std::size_t>(p)]);
    }
    const int weight = dag.node(i).kind == NodeKind::Barrier ? 0 : 1;
    level[i] = before + weight;
    depth = std::max(depth, level[i]);
  }
  return depth;
}

}  // namespace qcc::ir

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
#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "qcc/ir/gate_table.hpp"
#include "qcc/opt/gate_matrix.hpp"

namespace qcc::testing {

namespace {

using Matrix = Eigen::MatrixXcd;

Matrix to_eigen(const ir::Unitary2& u) {
  Matrix m(2, 2);
  m << u(0, 0), u(0, 1), u(1, 0), u(1, 1);
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Tensor product with `factors[q]` on qubit q and identity elsewhere.
Matrix embed(int n, const std::vector<std::pair<int, Matrix>>& factors) {
  Matrix out = Matrix::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    Matrix f = Matrix::Identity(2, 2);
    for (const auto& [target, m] : factors) {
      if (target == q) f = m;
    }
    out = kron(out, f);
  }
  return out;
}

Matrix projector(int bit) {
  Matrix p = Matrix::Zero(2, 2);
  p(bit, bit) = 1.0;
  return p;
}

Matrix swap_operator(int n, int a, int b) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::Index ba = (i >> a) & 1;
    const Eigen::Index bb = (i >> b) & 1;
    Eigen::Index j = i & ~((Eigen::Index{1} << a) | (Eigen::Index{1} << b));
    j |= (ba << b) | (bb << a);
    m(j, i) = 1.0;
  }
  return m;
}

Matrix gate_operator(int n, const ir::Inst& g) {
  std::vector<int> q;
  for (const auto& r : g.qubits) q.push_back(r.logical_id);
  if (g.matrix) return embed(n, {{q[0], to_eigen(*g.matrix)}});
  if (g.gate == "swap") return swap_operator(n, q[0], q[1]);
  if (g.gate == "ccx") {
    const Matrix x = to_eigen(opt::gate_matrix("x", {}));
    return embed(n, {}) - embed(n, {{q[0], projector(1)}, {q[1], projector(1)}}) +
           embed(n, {{q[0], projector(1)}, {q[1], projector(1)}, {q[2], x}});
  }
  if (const auto base = opt::controlled_base(g.gate); !base.empty()) {
    const Matrix u = to_eigen(opt::gate_matrix(base, g.params));
    return embed(n, {{q[0], projector(0)}}) + embed(n, {{q[0], projector(1)}, {q[1], u}});
  }
  return embed(n, {{q[0], to_eigen(opt::gate_matrix(g.gate, g.params))}});
}

}  // namespace

ir::QuantumProgram random_circuit(std::mt19937_64& rng, int n_qubits, int n_gates,
                                  bool allow_three_qubit) {
  std::vector<ir::GateInfo> pool;
  for (const auto& g : ir::primitive_gates()) {
    if (g.num_qubits > n_qubits) continue;
    if (g.num_qubits == 3 && !allow_three_qubit) continue;
    pool.push_back(g);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  ir::ProgramBuilder b(n_qubits);
  for (int i = 0; i < n_gates; ++i) {
    const auto& g = pool[pick(rng)];
    std::vector<int> qubits(static_cast<std::size_t>(n_qubits));
    for (int k = 0; k < n_qubits; ++k) qubits[static_cast<std::size_t>(k)] = k;
    std::shuffle(qubits.begin(), qubits.end(), rng);
    qubits.resize(static_cast<std::size_t>(g.num_qubits));
    std::vector<double> params;
    for (int k = 0; k < g.num_params; ++k) params.push_back(angle(rng));
    b.gate(std::string(g.name), qubits, params);
  }
  return b.build();
}

ir::Unitary2 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix z(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) z(i, j) = {normal(rng), normal(rng)};
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) {
    const auto d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return ir::Unitary2::from(q(0, 0), q(0, 1), q(1, 0), q(1, 1));
}

Matrix dense_unitary(const ir::QuantumProgram& program, int n) {
  if (n < 0) n = program.num_qubits();
  Matrix u = Matrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (const auto& op : program.ops) {
    const auto* inst = std::get_if<ir::Inst>(&op);
    if (inst == nullptr || inst->is_measure() || inst->is_reset()) continue;
    u = gate_operator(n, *inst) * u;
  }
  return u;
}

double phase_aligned_distance(const Matrix& a, const Matrix& b) {
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  std::complex<double> phase{1.0};
  if (std::abs(b(r, c)) > 1e-12) {
    phase = a(r, c) / b(r, c);
    phase /= std::abs(phase);
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

ir::GateCounts brute_force_counts(const ir::QuantumProgram& program) {
  struct Op {
    std::set<int> qubits;
    std::set<std::pair<int, int>> reads;
    std::set<std::pair<int, int>> writes;
    int weight = 1;
  };
  ir::GateCounts counts;
  std::vector<Op> ops;
  auto count_inst = [&](const ir::Inst& g) {
    if (g.is_measure()) {
      ++counts.measure_ops;
      return;
    }
    if (g.is_reset()) return;
    ++counts.total_gates;
    if (g.qubits.size() == 1) ++counts.single_qubit_gates;
    if (g.qubits.size() == 2) ++counts.two_qubit_gates;
    if (g.gate == "swap") ++counts.swap_gates;
  };
  for (const auto& op : program.ops) {
    Op o;
    if (const auto* g = std::get_if<ir::Inst>(&op)) {
      count_inst(*g);
      for (const auto& q : g->qubits) o.qubits.insert(q.logical_id);
      if (g->result) o.writes.insert({g->result->creg_id, g->result->index});
    } else if (const auto* c = std::get_if<ir::ConditionalRegion>(&op)) {
      count_inst(c->body);
      for (const auto& q : c->body.qubits) o.qubits.insert(q.logical_id);
      const auto& creg = program.cregs.at(static_cast<std::size_t>(c->creg_id));
      for (int k = 0; k < creg.size; ++k) o.reads.insert({c->creg_id, k});
      if (c->body.result) o.writes.insert({c->body.result->creg_id, c->body.result->index});
    } else if (const auto* b = std::get_if<ir::Barrier>(&op)) {
      for (const auto& q : b->qubits) o.qubits.insert(q.logical_id);
      o.weight = 0;
    } else {
      continue;
    }
    ops.push_back(std::move(o));
  }
  auto intersects = [](const auto& x, const auto& y) {
    return std::any_of(x.begin(), x.end(), [&](const auto& e) { return y.contains(e); });
  };
  std::vector<int> longest(ops.size(), 0);
  for (std::size_t j = 0; j < ops.size(); ++j) {
    int before = 0;
    for (std::size_t i = 0; i < j; ++i) {
      const bool conflict = intersects(ops[i].qubits, ops[j].qubits) ||
                            intersects(ops[i].writes, ops[j].writes) ||
                            intersects(ops[i].writes, ops[j].reads) ||
                            intersects(ops[i].reads, ops[j].writes);
      if (conflict) before = std::max(before, longest[i]);
    }
    longest[j] = before + ops[j].weight;
    counts.depth = std::max(counts.depth, longest[j]);
  }
  return counts;
}

std::string benchmark_dir() { return QCC_TEST_DATA_DIR "/benchmarks"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> benchmark_names() {
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(benchmark_dir())) {
    if (e.path().extension() == ".qasm") names.push_back(e.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::string routing_violation(const ir::GateDag& dag, const route::RoutingResult& result,
                              const route::CouplingGraph& graph) {
  route::Layout layout = result.initial_layout;
  std::vector<bool> done(dag.size(), false);
  int swaps = 0;
  for (std::size_t k = 0; k < result.routed_gates.size(); ++k) {
    const auto& g = result.routed_gates[k];
    const auto& q = g.node.qubits;
    const std::string where = "routed gate " + std::to_string(k) + " (" + g.node.name + ")";
    if (g.routing_inserted) {
      if (g.node.name != "swap" || q.size() != 2) return where + ": inserted gate is not a swap";
      if (!graph.adjacent(q[0], q[1])) return where + ": swap off the coupling graph";
      layout.swap_physical(q[0], q[1]);
      ++swaps;
      continue;
    }
    if (g.node.kind != ir::NodeKind::Barrier && q.size() == 2 && !graph.adjacent(q[0], q[1])) {
      return where + ": operands not adjacent";
    }
    if (g.node.kind != ir::NodeKind::Barrier && q.size() > 2) return where + ": wide gate";
    std::vector<int> logical;
    for (int p : q) {
      if (p < 0 || p >= graph.n_physical()) return where + ": bad physical index";
      const int l = layout.logical(p);
      if (l < 0) return where + ": physical qubit hosts nothing";
      logical.push_back(l);
    }
    bool matched = false;
    for (std::size_t i = 0; i < dag.size() && !matched; ++i) {
      const auto& n = dag.node(i);
      if (done[i] || n.name != g.node.name || n.kind != g.node.kind || n.qubits != logical ||
          n.params != g.node.params) {
        continue;
      }
      bool ready = true;
      for (int pred : dag.predecessors(i)) ready = ready && done[static_cast<std::size_t>(pred)];
      if (!ready) continue;
      done[i] = true;
      matched = true;
    }
    if (!matched) return where + ": no ready DAG node matches";
  }
  for (std::size_t i = 0; i < dag.size(); ++i) {
    if (!done[i]) return "DAG node " + std::to_string(i) + " (" + dag.node(i).name + ") never ran";
  }
  if (!(layout == result.final_layout)) return "tracked layout differs from final_layout";
  if (swaps != result.swap_count) return "swap_count does not match inserted swaps";
  return "";
}

}  // namespace qcc::testing

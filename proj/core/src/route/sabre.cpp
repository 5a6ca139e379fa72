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
#include "qcc/route/sabre.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "qcc/error.hpp"
#include "qcc/extract/extractor.hpp"
#include "qcc/ir/gate_table.hpp"
#include "qcc/qir/emit.hpp"

namespace qcc::route {

namespace {

using ir::DagNode;
using ir::GateDag;
using ir::NodeKind;

void check_routable(const GateDag& dag, const CouplingGraph& graph, const Layout& layout) {
  if (dag.num_qubits() > graph.n_physical()) {
    throw CapacityError("circuit uses " + std::to_string(dag.num_qubits()) +
                        " qubits but the device has " + std::to_string(graph.n_physical()));
  }
  if (layout.n_logical() != dag.num_qubits() || layout.n_physical() != graph.n_physical()) {
    throw RoutingError("initial layout does not match the circuit and device sizes");
  }
  for (const auto& n : dag.nodes()) {
    if (n.kind == NodeKind::MultiQubit) {
      throw RoutingError("gate '" + n.name + "' acts on more than two qubits; decompose first");
    }
  }
}

class SwapRouter {
 public:
  SwapRouter(const GateDag& dag, const Layout& initial, const CouplingGraph& graph,
             const SabreConfig& config)
      : dag_(dag), graph_(graph), config_(config), layout_(initial),
        remaining_preds_(dag.size()),
        decay_(static_cast<std::size_t>(graph.n_physical()), 1.0) {
    for (std::size_t i = 0; i < dag.size(); ++i) {
      remaining_preds_[i] = dag.predecessors(i).size();
      if (remaining_preds_[i] == 0) front_.insert(static_cast<int>(i));
    }
    result_.initial_layout = initial;
  }

  RoutingResult run() {
    const std::size_t gates = std::max<std::size_t>(dag_.gate_count(), 1);
    const std::size_t bound = 10 * gates * static_cast<std::size_t>(graph_.n_physical());
    const int valve = 10 * graph_.n_physical();
    int swaps_since_progress = 0;
    while (true) {
      if (execute_ready()) swaps_since_progress = 0;
      if (front_.empty()) break;
      if (static_cast<std::size_t>(result_.swap_count) > bound) {
        throw RoutingError("routing made no progress within the swap budget");
      }
      if (swaps_since_progress >= valve) {
        force_first_blocked();
        swaps_since_progress = 0;
        continue;
      }
      const auto [u, v] = best_swap();
      apply_swap(u, v);
      decay_[static_cast<std::size_t>(u)] *= config_.decay_factor;
      decay_[static_cast<std::size_t>(v)] *= config_.decay_factor;
      if (++rounds_ % config_.decay_reset_interval == 0) {
        std::fill(decay_.begin(), decay_.end(), 1.0);
      }
      ++swaps_since_progress;
    }
    result_.final_layout = layout_;
    return std::move(result_);
  }

 private:
  bool executable(const DagNode& n) const {
    if (n.kind != NodeKind::TwoQubit) return true;
    return graph_.adjacent(layout_.phys(n.qubits[0]), layout_.phys(n.qubits[1]));
  }

  /// Emits front-layer gates until every remaining one is blocked.
  bool execute_ready() {
    bool progressed = false;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = front_.begin(); it != front_.end();) {
        const int id = *it;
        const DagNode& n = dag_.node(static_cast<std::size_t>(id));
        if (!executable(n)) {
          ++it;
          continue;
        }
        RoutedGate g{n, false};
        for (int& q : g.node.qubits) q = layout_.phys(q);
        result_.routed_gates.push_back(std::move(g));
        it = front_.erase(it);
        for (int s : dag_.successors(static_cast<std::size_t>(id))) {
          if (--remaining_preds_[static_cast<std::size_t>(s)] == 0) front_.insert(s);
        }
        changed = true;
        progressed = true;
        // newly ready nodes may precede `it`; restart the scan
        break;
      }
    }
    return progressed;
  }

  std::vector<int> extended_set() const {
    std::vector<int> out;
    std::set<int> seen(front_.begin(), front_.end());
    std::vector<int> queue(front_.begin(), front_.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int s : dag_.successors(static_cast<std::size_t>(queue[head]))) {
        if (!seen.insert(s).second) continue;
        if (dag_.node(static_cast<std::size_t>(s)).kind == NodeKind::TwoQubit) {
          out.push_back(s);
          if (out.size() >= config_.extended_set_size) return out;
        }
        queue.push_back(s);
      }
    }
    return out;
  }

  double set_distance(const std::vector<int>& nodes, const Layout& layout) const {
    if (nodes.empty()) return 0.0;
    double sum = 0.0;
    for (int id : nodes) {
      const auto& q = dag_.node(static_cast<std::size_t>(id)).qubits;
      sum += graph_.distance(layout.phys(q[0]), layout.phys(q[1]));
    }
    return sum / static_cast<double>(nodes.size());
  }

  std::pair<int, int> best_swap() const {
    std::vector<int> blocked;
    std::set<std::pair<int, int>> candidates;
    for (int id : front_) {
      const DagNode& n = dag_.node(static_cast<std::size_t>(id));
      if (n.kind != NodeKind::TwoQubit) continue;
      blocked.push_back(id);
      for (int l : n.qubits) {
        const int p = layout_.phys(l);
        for (int nb : graph_.neighbors(p)) candidates.emplace(std::min(p, nb), std::max(p, nb));
      }
    }
    const auto extended = extended_set();
    std::pair<int, int> best{-1, -1};
    double best_cost = 0.0;
    for (const auto& [u, v] : candidates) {
      Layout trial = layout_;
      trial.swap_physical(u, v);
      const double cost =
          std::max(decay_[static_cast<std::size_t>(u)], decay_[static_cast<std::size_t>(v)]) *
          (set_distance(blocked, trial) +
           config_.extended_weight * set_distance(extended, trial));
      if (best.first < 0 || cost < best_cost) {
        best = {u, v};
        best_cost = cost;
      }
    }
    return best;
  }

  void apply_swap(int u, int v) {
    layout_.swap_physical(u, v);
    DagNode node;
    node.kind = NodeKind::TwoQubit;
    node.name = std::string(ir::kSwap);
    node.qubits = {u, v};
    result_.routed_gates.push_back({std::move(node), true});
    ++result_.swap_count;
  }

  /// Walks the first operand of the lowest-numbered blocked gate towards the
  /// second until they are adjacent.
  void force_first_blocked() {
    for (int id : front_) {
      const DagNode& n = dag_.node(static_cast<std::size_t>(id));
      if (n.kind != NodeKind::TwoQubit) continue;
      const auto path =
          graph_.shortest_path(layout_.phys(n.qubits[0]), layout_.phys(n.qubits[1]));
      for (std::size_t i = 0; i + 2 < path.size(); ++i) apply_swap(path[i], path[i + 1]);
      return;
    }
  }

  const GateDag& dag_;
  const CouplingGraph& graph_;
  const SabreConfig& config_;
  Layout layout_;
  std::vector<std::size_t> remaining_preds_;
  std::set<int> front_;
  std::vector<double> decay_;
  int rounds_ = 0;
  RoutingResult result_;
};

}  // namespace

RoutingResult sabre_swap(const GateDag& dag, const Layout& initial, const CouplingGraph& graph,
                         std::uint64_t /*seed*/, const SabreConfig& config) {
  check_routable(dag, graph, initial);
  return SwapRouter(dag, initial, graph, config).run();
}

Layout random_layout(int n_logical, int n_physical, std::uint64_t seed) {
  std::vector<int> perm(static_cast<std::size_t>(n_physical));
  std::iota(perm.begin(), perm.end(), 0);
  // Explicit Fisher-Yates: std::shuffle's draw sequence is implementation
  // defined, this one is the same on every standard library.
  std::mt19937_64 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(perm[i - 1], perm[j]);
  }
  perm.resize(static_cast<std::size_t>(n_logical));
  return Layout(std::move(perm), n_physical);
}

Layout sabre_layout(const GateDag& dag, const CouplingGraph& graph, int iterations,
                    std::uint64_t seed, const SabreConfig& config) {
  Layout layout = random_layout(dag.num_qubits(), graph.n_physical(), seed);
  check_routable(dag, graph, layout);
  const GateDag reversed = dag.reversed();

  Layout best = layout;
  int best_swaps = -1;
  auto consider = [&](const Layout& candidate) {
    const int swaps = sabre_swap(dag, candidate, graph, seed, config).swap_count;
    if (best_swaps < 0 || swaps < best_swaps) {
      best = candidate;
      best_swaps = swaps;
    }
    return swaps;
  };

  for (int it = 0; it < iterations; ++it) {
    const RoutingResult forward = sabre_swap(dag, layout, graph, seed, config);
    if (best_swaps < 0 || forward.swap_count < best_swaps) {
      best = layout;
      best_swaps = forward.swap_count;
    }
    if (forward.swap_count == 0) return layout;
    layout = sabre_swap(reversed, forward.final_layout, graph, seed, config).final_layout;
  }
  if (iterations > 0) consider(layout);
  return best_swaps < 0 ? layout : best;
}

RoutedProgram route_program(const ir::QuantumProgram& program, const CouplingGraph& graph,
                            const RouteOptions& options) {
  if (program.num_qubits() > graph.n_physical()) {
    throw CapacityError("program uses " + std::to_string(program.num_qubits()) +
                        " qubits but the device has " + std::to_string(graph.n_physical()));
  }
  for (const auto& op : program.ops) {
    if (const auto* c = std::get_if<ir::ConditionalRegion>(&op)) {
      if (c->body.qubits.size() != 1) {
        throw RoutingError("conditional '" + c->body.gate +
                               "' is not a single-qubit operation; only straight-line "
                               "regions can be routed",
                           c->body.span);
      }
    }
  }
  const GateDag dag = ir::build_dag(program);
  const Layout initial =
      options.layout ? *options.layout
                     : sabre_layout(dag, graph, options.sabre_iterations, options.seed,
                                    options.config);
  RoutingResult routing = sabre_swap(dag, initial, graph, options.seed, options.config);

  const int n_phys = graph.n_physical();
  auto phys_ref = [](int p) { return ir::QubitRef{0, p, p}; };
  std::vector<ir::IrOp> body;
  for (const auto& g : routing.routed_gates) {
    if (g.routing_inserted) {
      ir::Inst swap;
      swap.gate = std::string(ir::kSwap);
      for (int p : g.node.qubits) swap.qubits.push_back(phys_ref(p));
      body.emplace_back(std::move(swap));
      continue;
    }
    ir::IrOp op = program.ops.at(g.node.origin);
    std::visit(
        [&](auto& o) {
          using T = std::decay_t<decltype(o)>;
          std::vector<ir::QubitRef>* qubits = nullptr;
          if constexpr (std::is_same_v<T, ir::Inst>) {
            qubits = &o.qubits;
          } else if constexpr (std::is_same_v<T, ir::ConditionalRegion>) {
            qubits = &o.body.qubits;
          } else if constexpr (std::is_same_v<T, ir::Barrier>) {
            qubits = &o.qubits;
          }
          if (qubits == nullptr) return;
          for (std::size_t k = 0; k < qubits->size(); ++k) {
            (*qubits)[k] = phys_ref(g.node.qubits[k]);
          }
        },
        op);
    body.push_back(std::move(op));
  }
  std::vector<ir::QRegister> regs{{0, "q", n_phys, 0}};
  return {ir::finalize_program(std::move(regs), program.cregs, std::move(body)),
          std::move(routing)};
}

std::string route_qir(std::string_view module_text, const CouplingGraph& graph,
                      const RouteOptions& options) {
  const auto kernels = extract::find_quantum_kernels(module_text);
  if (kernels.size() != 1) {
    throw RoutingError("expected exactly one quantum kernel, found " +
                       std::to_string(kernels.size()));
  }
  const auto layout = extract::parse_result_layout(module_text);
  const auto circuit = extract::extract_circuit(kernels.front().text, layout, kernels.front().first_line);
  const auto program = extract::to_program(circuit, layout);
  return qir::emit_qir(route_program(program, graph, options).program, kernels.front().name)
      .text;
}

}  // namespace qcc::route

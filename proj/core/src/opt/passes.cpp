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
#include "qcc/opt/passes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "qcc/error.hpp"
#include "qcc/ir/gate_table.hpp"
#include "qcc/opt/gate_matrix.hpp"

namespace qcc::opt {

using ir::Inst;
using ir::IrOp;
using ir::QubitRef;
using ir::Unitary2;

namespace {

constexpr double kPi = std::numbers::pi;

Inst make_inst(std::string gate, std::vector<double> params,
               std::vector<QubitRef> qubits, const Inst& origin) {
  Inst inst;
  inst.gate = std::move(gate);
  inst.params = std::move(params);
  inst.qubits = std::move(qubits);
  inst.span = origin.span;
  return inst;
}

std::vector<const QubitRef*> touched(const IrOp& op) {
  std::vector<const QubitRef*> out;
  const std::vector<QubitRef>* qubits = nullptr;
  if (const auto* inst = std::get_if<Inst>(&op)) qubits = &inst->qubits;
  if (const auto* b = std::get_if<ir::Barrier>(&op)) qubits = &b->qubits;
  if (const auto* c = std::get_if<ir::ConditionalRegion>(&op)) qubits = &c->body.qubits;
  if (qubits != nullptr) {
    for (const auto& q : *qubits) out.push_back(&q);
  }
  return out;
}

/// Matrix of a fusable op, nullopt when the op fences runs.
std::optional<Unitary2> fusable_matrix(const IrOp& op) {
  const auto* inst = std::get_if<Inst>(&op);
  if (inst == nullptr || !inst->is_single_qubit_gate()) return std::nullopt;
  if (inst->matrix) return inst->matrix;
  const ir::GateInfo* info = ir::find_primitive(inst->gate);
  if (info == nullptr || info->num_qubits != 1) return std::nullopt;
  return gate_matrix(inst->gate, inst->params);
}

struct Run {
  QubitRef qubit;
  std::vector<std::size_t> indices;
  /// Time-ordered product.
  Unitary2 product;
};

std::vector<Run> collect_runs(const std::vector<IrOp>& body, int num_qubits) {
  std::vector<Run> runs;
  std::vector<Run> pending(static_cast<std::size_t>(num_qubits));
  auto flush = [&](int q) {
    Run& r = pending[static_cast<std::size_t>(q)];
    if (!r.indices.empty()) runs.push_back(std::move(r));
    r = Run{};
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (auto m = fusable_matrix(body[i])) {
      const QubitRef& q = std::get<Inst>(body[i]).qubits.front();
      Run& r = pending[static_cast<std::size_t>(q.logical_id)];
      if (r.indices.empty()) {
        r.qubit = q;
        r.product = Unitary2::identity();
      }
      r.indices.push_back(i);
      r.product = *m * r.product;
      continue;
    }
    for (const QubitRef* q : touched(body[i])) flush(q->logical_id);
  }
  for (int q = 0; q < num_qubits; ++q) flush(q);
  return runs;
}

/// Replaces each run that has a replacement; the new ops take the place of
/// the run's last op.
std::vector<IrOp> rewrite_runs(
    const std::vector<IrOp>& body, const std::vector<Run>& runs,
    const std::vector<std::optional<std::vector<IrOp>>>& replacement) {
  std::vector<bool> removed(body.size(), false);
  std::vector<const std::vector<IrOp>*> insert_at(body.size(), nullptr);
  for (std::size_t r = 0; r < runs.size(); ++r) {
    if (!replacement[r]) continue;
    for (std::size_t i : runs[r].indices) removed[i] = true;
    insert_at[runs[r].indices.back()] = &*replacement[r];
  }
  std::vector<IrOp> out;
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (insert_at[i] != nullptr) {
      out.insert(out.end(), insert_at[i]->begin(), insert_at[i]->end());
    }
    if (!removed[i]) out.push_back(body[i]);
  }
  return out;
}

std::vector<IrOp> rotations_to_ops(const std::vector<RotationGate>& rots,
                                   const QubitRef& qubit, const Inst& origin) {
  std::vector<IrOp> ops;
  for (const auto& r : rots) {
    ops.emplace_back(make_inst(r.name, {r.angle}, {qubit}, origin));
  }
  return ops;
}

}  // namespace

std::vector<RotationGate> pruned_rotations(const EulerDecomposition& d,
                                           double zero_tol) {
  const std::string outer(outer_axis(d.basis));
  const std::string inner(inner_axis(d.basis));
  const RotationGate sequence[] = {{outer, d.delta}, {inner, d.gamma}, {outer, d.beta}};
  std::vector<RotationGate> out;
  for (const auto& raw : sequence) {
    const double angle = normalize_angle(raw.angle);
    if (std::abs(angle) < zero_tol) continue;
    if (!out.empty() && out.back().name == raw.name) {
      out.back().angle = normalize_angle(out.back().angle + angle);
      if (std::abs(out.back().angle) < zero_tol) out.pop_back();
      continue;
    }
    out.push_back({raw.name, angle});
  }
  return out;
}

std::vector<RotationGate> select_decomposition(const Unitary2& u,
                                               const NativeGateSet& native) {
  std::optional<std::vector<RotationGate>> best;
  for (const EulerBasis basis : kAllBases) {
    const EulerDecomposition d = euler_decompose(u, basis);
    // (b, g, d) and (b + pi, -g, d + pi) give the same operator up to phase;
    // the mirrored form prunes better when both outer angles sit near pi.
    EulerDecomposition mirrored = d;
    mirrored.beta = d.beta + std::numbers::pi;
    mirrored.gamma = -d.gamma;
    mirrored.delta = d.delta + std::numbers::pi;
    for (const auto& form : {d, mirrored}) {
      auto rots = pruned_rotations(form);
      bool ok = true;
      for (const auto& r : rots) ok = ok && native.contains(r.name);
      if (ok && (!best || rots.size() < best->size())) best = std::move(rots);
    }
  }
  if (!best) {
    throw NoValidBasis("no Euler basis maps into native gate set {" +
                       native.to_string() + "}");
  }
  return *best;
}

ir::QuantumProgram fuse_single_qubit_runs(const ir::QuantumProgram& program) {
  const auto body = ir::program_body(program);
  const auto runs = collect_runs(body, program.num_qubits());
  std::vector<std::optional<std::vector<IrOp>>> replacement(runs.size());
  for (std::size_t r = 0; r < runs.size(); ++r) {
    if (runs[r].indices.size() < 2) continue;
    const Inst& first = std::get<Inst>(body[runs[r].indices.front()]);
    Inst fused = make_inst(std::string(ir::kFusedUnitary), {}, {runs[r].qubit}, first);
    fused.matrix = runs[r].product;
    replacement[r] = std::vector<IrOp>{std::move(fused)};
  }
  return ir::with_body(program, rewrite_runs(body, runs, replacement));
}

ir::QuantumProgram fuse_and_resynthesize(const ir::QuantumProgram& program,
                                         const NativeGateSet& native) {
  const auto body = ir::program_body(program);
  const auto runs = collect_runs(body, program.num_qubits());
  std::vector<std::optional<std::vector<IrOp>>> replacement(runs.size());
  constexpr std::size_t kNonNative = std::numeric_limits<std::size_t>::max() / 4;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    std::size_t cost = 0;
    for (std::size_t i : runs[r].indices) {
      const Inst& inst = std::get<Inst>(body[i]);
      cost += (inst.matrix || !native.contains(inst.gate)) ? kNonNative : 1;
    }
    std::vector<RotationGate> rots;
    try {
      rots = select_decomposition(runs[r].product, native);
    } catch (const NoValidBasis&) {
      continue;
    }
    if (rots.size() < cost) {
      const Inst& first = std::get<Inst>(body[runs[r].indices.front()]);
      replacement[r] = rotations_to_ops(rots, runs[r].qubit, first);
    }
  }
  return ir::with_body(program, rewrite_runs(body, runs, replacement));
}

namespace {

/// Library bodies for multi-qubit gates, in terms of other primitives.
std::optional<std::vector<Inst>> expansion_rule(const Inst& g,
                                                const NativeGateSet& native) {
  const auto& q = g.qubits;
  auto mk = [&](std::string name, std::vector<QubitRef> qs,
                std::vector<double> params = {}) {
    return make_inst(std::move(name), std::move(params), std::move(qs), g);
  };
  if (g.gate == "ccx") {
    const QubitRef a = q[0], b = q[1], c = q[2];
    return std::vector<Inst>{
        mk("h", {c}),     mk("cx", {b, c}), mk("tdg", {c}), mk("cx", {a, c}),
        mk("t", {c}),     mk("cx", {b, c}), mk("tdg", {c}), mk("cx", {a, c}),
        mk("t", {b}),     mk("t", {c}),     mk("h", {c}),   mk("cx", {a, b}),
        mk("t", {a}),     mk("tdg", {b}),   mk("cx", {a, b})};
  }
  if (g.gate == "cz") return std::vector<Inst>{mk("h", {q[1]}), mk("cx", {q[0], q[1]}), mk("h", {q[1]})};
  if (g.gate == "cy") return std::vector<Inst>{mk("sdg", {q[1]}), mk("cx", {q[0], q[1]}), mk("s", {q[1]})};
  if (g.gate == "ch") {
    const QubitRef a = q[0], b = q[1];
    return std::vector<Inst>{mk("h", {b}), mk("sdg", {b}), mk("cx", {a, b}), mk("h", {b}),
                             mk("t", {b}), mk("cx", {a, b}), mk("t", {b}), mk("h", {b}),
                             mk("s", {b}), mk("x", {b}), mk("s", {a})};
  }
  if (g.gate == "crz") {
    const double l = g.params[0];
    return std::vector<Inst>{mk("u1", {q[1]}, {l / 2}), mk("cx", {q[0], q[1]}),
                             mk("u1", {q[1]}, {-l / 2}), mk("cx", {q[0], q[1]})};
  }
  if (g.gate == "cu1") {
    const double l = g.params[0];
    return std::vector<Inst>{mk("u1", {q[0]}, {l / 2}), mk("cx", {q[0], q[1]}),
                             mk("u1", {q[1]}, {-l / 2}), mk("cx", {q[0], q[1]}),
                             mk("u1", {q[1]}, {l / 2})};
  }
  if (g.gate == "cu3") {
    const double theta = g.params[0], phi = g.params[1], lambda = g.params[2];
    return std::vector<Inst>{
        mk("u1", {q[0]}, {(lambda + phi) / 2}), mk("u1", {q[1]}, {(lambda - phi) / 2}),
        mk("cx", {q[0], q[1]}), mk("u3", {q[1]}, {-theta / 2, 0.0, -(phi + lambda) / 2}),
        mk("cx", {q[0], q[1]}), mk("u3", {q[1]}, {theta / 2, phi, 0.0})};
  }
  if (g.gate == "swap") {
    return std::vector<Inst>{mk("cx", {q[0], q[1]}), mk("cx", {q[1], q[0]}),
                             mk("cx", {q[0], q[1]})};
  }
  if (g.gate == "cx" && native.contains("cz")) {
    return std::vector<Inst>{mk("h", {q[1]}), mk("cz", {q[0], q[1]}), mk("h", {q[1]})};
  }
  return std::nullopt;
}

void expand(const Inst& inst, const NativeGateSet& native, std::vector<Inst>& out,
            int depth) {
  if (inst.is_measure() || inst.is_reset() ||
      (!inst.matrix && native.contains(inst.gate))) {
    out.push_back(inst);
    return;
  }
  if (depth > 16) {
    throw UnsupportedGate("decomposition of '" + inst.gate + "' does not terminate",
                          inst.span);
  }
  const ir::GateInfo* info = ir::find_primitive(inst.gate);
  if (inst.matrix || (info != nullptr && info->num_qubits == 1)) {
    const Unitary2 u = inst.matrix ? *inst.matrix : gate_matrix(inst.gate, inst.params);
    std::vector<RotationGate> rots;
    try {
      rots = select_decomposition(u, native);
    } catch (const NoValidBasis&) {
      throw UnsupportedGate("gate '" + inst.gate + "' has no decomposition into {" +
                                native.to_string() + "}",
                            inst.span);
    }
    for (const auto& r : rots) out.push_back(make_inst(r.name, {r.angle}, inst.qubits, inst));
    return;
  }
  if (info != nullptr) {
    if (auto body = expansion_rule(inst, native)) {
      for (const Inst& g : *body) expand(g, native, out, depth + 1);
      return;
    }
  }
  throw UnsupportedGate("unsupported gate '" + inst.gate + "' for native set {" +
                            native.to_string() + "}",
                        inst.span);
}

}  // namespace

ir::QuantumProgram decompose_unsupported(const ir::QuantumProgram& program,
                                         const NativeGateSet& native) {
  std::vector<IrOp> body;
  for (const IrOp& op : ir::program_body(program)) {
    std::vector<Inst> expanded;
    if (const auto* inst = std::get_if<Inst>(&op)) {
      expand(*inst, native, expanded, 0);
      for (auto& g : expanded) body.emplace_back(std::move(g));
    } else if (const auto* c = std::get_if<ir::ConditionalRegion>(&op)) {
      expand(c->body, native, expanded, 0);
      for (auto& g : expanded) {
        body.emplace_back(ir::ConditionalRegion{c->creg_id, c->value, std::move(g)});
      }
    } else {
      body.push_back(op);
    }
  }
  return ir::with_body(program, std::move(body));
}

ir::QuantumProgram cancel_two_qubit_pairs(const ir::QuantumProgram& program) {
  const auto body = ir::program_body(program);
  std::vector<std::optional<IrOp>> out;
  out.reserve(body.size());
  std::vector<std::vector<std::size_t>> stack(static_cast<std::size_t>(program.num_qubits()));
  auto self_inverse = [](const Inst& g) {
    return g.qubits.size() == 2 && !g.matrix &&
           (g.gate == "cx" || g.gate == "cz" || g.gate == "swap");
  };
  auto same_operands = [](const Inst& a, const Inst& b) {
    const int a0 = a.qubits[0].logical_id, a1 = a.qubits[1].logical_id;
    const int b0 = b.qubits[0].logical_id, b1 = b.qubits[1].logical_id;
    if (a0 == b0 && a1 == b1) return true;
    return a.gate != "cx" && a0 == b1 && a1 == b0;
  };
  for (const IrOp& op : body) {
    const auto* inst = std::get_if<Inst>(&op);
    if (inst != nullptr && self_inverse(*inst)) {
      auto& sa = stack[static_cast<std::size_t>(inst->qubits[0].logical_id)];
      auto& sb = stack[static_cast<std::size_t>(inst->qubits[1].logical_id)];
      if (!sa.empty() && !sb.empty() && sa.back() == sb.back()) {
        const std::size_t j = sa.back();
        const auto* prev = std::get_if<Inst>(&*out[j]);
        if (prev != nullptr && prev->gate == inst->gate && same_operands(*prev, *inst)) {
          out[j].reset();
          sa.pop_back();
          sb.pop_back();
          continue;
        }
      }
    }
    const std::size_t id = out.size();
    for (const QubitRef* q : touched(op)) {
      stack[static_cast<std::size_t>(q->logical_id)].push_back(id);
    }
    out.emplace_back(op);
  }
  std::vector<IrOp> kept;
  for (auto& op : out) {
    if (op) kept.push_back(std::move(*op));
  }
  return ir::with_body(program, std::move(kept));
}

namespace {

ir::QuantumProgram resynthesis_fixpoint(ir::QuantumProgram p, const NativeGateSet& native) {
  for (int round = 0; round < 10; ++round) {
    ir::QuantumProgram next = fuse_and_resynthesize(p, native);
    const bool changed = ir::count_gates(next) != ir::count_gates(p);
    p = std::move(next);
    if (!changed) break;
  }
  return p;
}

}  // namespace

ir::QuantumProgram optimize(const ir::QuantumProgram& program, int level,
                            const NativeGateSet& native) {
  if (level < 0 || level > 3) {
    throw Error("optimization level must be in 0..3, got " + std::to_string(level));
  }
  ir::QuantumProgram p = decompose_unsupported(program, native);
  if (level == 0) return p;
  p = resynthesis_fixpoint(std::move(p), native);
  if (level == 1) return p;
  if (level == 2) {
    return resynthesis_fixpoint(cancel_two_qubit_pairs(p), native);
  }
  for (int round = 0; round < 10; ++round) {
    ir::QuantumProgram cancelled = cancel_two_qubit_pairs(p);
    if (ir::count_gates(cancelled) == ir::count_gates(p)) break;
    p = resynthesis_fixpoint(std::move(cancelled), native);
  }
  return p;
}

}  // namespace qcc::opt

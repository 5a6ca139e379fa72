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
#include "qcc/sim/statevector.hpp"

#include <cmath>
#include <string>

#include "qcc/error.hpp"
#include "qcc/ir/gate_table.hpp"
#include "qcc/opt/gate_matrix.hpp"

namespace qcc::sim {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw OracleError("state vector size " + std::to_string(n) + " outside 0.." +
                      std::to_string(kMaxQubits));
  }
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
  check_size(n);
  amps_.assign(std::size_t{1} << n, Complex{0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n, std::vector<Complex> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  check_size(n);
  if (amps_.size() != (std::size_t{1} << n)) {
    throw DimensionMismatch("expected " + std::to_string(std::size_t{1} << n) +
                            " amplitudes, got " + std::to_string(amps_.size()));
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::check_qubit(int q) const {
  if (q < 0 || q >= n_) {
    throw OracleError("qubit " + std::to_string(q) + " outside a " + std::to_string(n_) +
                      "-qubit state");
  }
}

void StateVector::apply_1q(const ir::Unitary2& u, int target) {
  std::array<int, 0> none{};
  apply_controlled(u, none, target);
}

void StateVector::apply_controlled(const ir::Unitary2& u, std::span<const int> controls,
                                   int target) {
  check_qubit(target);
  std::size_t mask = 0;
  for (int c : controls) {
    check_qubit(c);
    mask |= std::size_t{1} << c;
  }
  const std::size_t bit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & bit) != 0 || (i & mask) != mask) continue;
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | bit];
    amps_[i] = u.m[0] * a0 + u.m[1] * a1;
    amps_[i | bit] = u.m[2] * a0 + u.m[3] * a1;
  }
}

void StateVector::apply_swap(int a, int b) {
  check_qubit(a);
  check_qubit(b);
  const std::size_t ba = std::size_t{1} << a;
  const std::size_t bb = std::size_t{1} << b;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & ba) != 0 && (i & bb) == 0) std::swap(amps_[i], amps_[(i & ~ba) | bb]);
  }
}

void StateVector::apply_gate(std::string_view name, std::span<const double> params,
                             std::span<const int> qubits, const ir::Unitary2* matrix) {
  auto expect = [&](std::size_t n) {
    if (qubits.size() != n) {
      throw OracleError("gate '" + std::string(name) + "' expects " + std::to_string(n) +
                        " qubits");
    }
  };
  if (name == ir::kMeasure || name == ir::kReset) {
    throw OracleError("'" + std::string(name) + "' is not unitary");
  }
  if (matrix != nullptr) {
    expect(1);
    apply_1q(*matrix, qubits[0]);
  } else if (name == ir::kSwap) {
    expect(2);
    apply_swap(qubits[0], qubits[1]);
  } else if (name == "ccx") {
    expect(3);
    apply_controlled(opt::gate_matrix("x", {}), qubits.first(2), qubits[2]);
  } else if (const auto base = opt::controlled_base(name); !base.empty()) {
    expect(2);
    apply_controlled(opt::gate_matrix(base, params), qubits.first(1), qubits[1]);
  } else {
    expect(1);
    apply_1q(opt::gate_matrix(name, params), qubits[0]);
  }
}

StateVector simulate(const ir::QuantumProgram& program, int n, bool ignore_measurements) {
  StateVector state(n < 0 ? program.num_qubits() : n);
  std::vector<int> qubits;
  for (const auto& op : program.ops) {
    if (const auto* c = std::get_if<ir::ConditionalRegion>(&op)) {
      if (ignore_measurements) continue;
      throw OracleError("conditional operations need measurement outcomes", c->body.span);
    }
    const auto* inst = std::get_if<ir::Inst>(&op);
    if (inst == nullptr) continue;
    if (inst->is_measure() || inst->is_reset()) {
      if (ignore_measurements) continue;
      throw OracleError("'" + inst->gate + "' in unitary simulation", inst->span);
    }
    qubits.clear();
    for (const auto& q : inst->qubits) qubits.push_back(q.logical_id);
    state.apply_gate(inst->gate, inst->params, qubits,
                     inst->matrix ? &*inst->matrix : nullptr);
  }
  return state;
}

StateVector simulate(const std::vector<extract::ExtractedGate>& gates, int n,
                     bool ignore_measurements) {
  StateVector state(n);
  for (const auto& g : gates) {
    if (g.kind == ir::NodeKind::Measure || g.name == ir::kReset) {
      if (ignore_measurements) continue;
      throw OracleError("'" + g.name + "' in unitary simulation (line " +
                        std::to_string(g.origin_line) + ")");
    }
    state.apply_gate(g.name, g.params, g.operands);
  }
  return state;
}

bool equiv_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("comparing states of dimension " + std::to_string(a.dimension()) +
                            " and " + std::to_string(b.dimension()));
  }
  Complex inner{0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) inner += std::conj(a[i]) * b[i];
  return std::abs(inner) >= 1.0 - tol;
}

StateVector permute_qubits(const StateVector& v, std::span<const int> perm) {
  const int n = v.num_qubits();
  if (static_cast<int>(perm.size()) != n) {
    throw InvalidPermutation("permutation has " + std::to_string(perm.size()) +
                             " entries for " + std::to_string(n) + " qubits");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw InvalidPermutation("not a bijection on 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Complex> out(v.dimension());
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    std::size_t j = 0;
    for (int k = 0; k < n; ++k) {
      if ((i >> k) & 1U) j |= std::size_t{1} << perm[static_cast<std::size_t>(k)];
    }
    out[j] = v[i];
  }
  return StateVector(n, std::move(out));
}

StateVector pad_qubits(const StateVector& v, int n) {
  if (n < v.num_qubits()) {
    throw DimensionMismatch("cannot pad a " + std::to_string(v.num_qubits()) +
                            "-qubit state down to " + std::to_string(n));
  }
  check_size(n);
  std::vector<Complex> out(std::size_t{1} << n, Complex{0.0});
  std::copy(v.amplitudes().begin(), v.amplitudes().end(), out.begin());
  return StateVector(n, std::move(out));
}

}  // namespace qcc::sim

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
#include "qcc/opt/gate_matrix.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcc/error.hpp"
#include "qcc/ir/gate_table.hpp"

namespace qcc::opt {

using ir::Complex;
using ir::Unitary2;

namespace {

constexpr Complex kI{0.0, 1.0};

Unitary2 u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return Unitary2::from(c, -std::exp(kI * lambda) * s, std::exp(kI * phi) * s,
                        std::exp(kI * (phi + lambda)) * c);
}

Unitary2 diag(Complex a, Complex b) { return Unitary2::from(a, 0.0, 0.0, b); }

}  // namespace

Unitary2 rz_matrix(double theta) {
  return diag(std::exp(-kI * (theta / 2)), std::exp(kI * (theta / 2)));
}

Unitary2 ry_matrix(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return Unitary2::from(c, -s, s, c);
}

Unitary2 rx_matrix(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return Unitary2::from(c, -kI * s, -kI * s, c);
}

Unitary2 gate_matrix(std::string_view gate, std::span<const double> params) {
  const ir::GateInfo* info = ir::find_primitive(gate);
  if (info == nullptr || info->num_qubits != 1) {
    throw UnknownGate("no single-qubit matrix for gate '" + std::string(gate) + "'");
  }
  if (params.size() != static_cast<std::size_t>(info->num_params)) {
    throw UnknownGate("gate '" + std::string(gate) + "' expects " +
                      std::to_string(info->num_params) + " parameter(s)");
  }
  const double r = std::numbers::sqrt2 / 2;
  const double quarter = std::numbers::pi / 4;
  if (gate == "id") return Unitary2::identity();
  if (gate == "x") return Unitary2::from(0, 1, 1, 0);
  if (gate == "y") return Unitary2::from(0, -kI, kI, 0);
  if (gate == "z") return diag(1, -1);
  if (gate == "h") return Unitary2::from(r, r, r, -r);
  if (gate == "s") return diag(1, kI);
  if (gate == "sdg") return diag(1, -kI);
  if (gate == "t") return diag(1, std::exp(kI * quarter));
  if (gate == "tdg") return diag(1, std::exp(-kI * quarter));
  if (gate == "rz") return rz_matrix(params[0]);
  if (gate == "ry") return ry_matrix(params[0]);
  if (gate == "rx") return rx_matrix(params[0]);
  if (gate == "u1") return diag(1, std::exp(kI * params[0]));
  if (gate == "u2") return u3_matrix(std::numbers::pi / 2, params[0], params[1]);
  return u3_matrix(params[0], params[1], params[2]);
}

std::string_view controlled_base(std::string_view gate) {
  if (gate == "cx") return "x";
  if (gate == "cy") return "y";
  if (gate == "cz") return "z";
  if (gate == "ch") return "h";
  if (gate == "crz") return "rz";
  if (gate == "cu1") return "u1";
  if (gate == "cu3") return "u3";
  return {};
}

}  // namespace qcc::opt

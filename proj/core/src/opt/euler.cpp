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
#include "qcc/opt/euler.hpp"

#include <cmath>
#include <numbers>

#include "qcc/error.hpp"
#include "qcc/opt/gate_matrix.hpp"

namespace qcc::opt {

using ir::Complex;
using ir::Unitary2;

namespace {

constexpr double kPi = std::numbers::pi;

/// Conjugating frame W such that W Rz W^dagger and W Ry W^dagger are the
/// outer and inner axes of the basis.
Unitary2 frame(EulerBasis basis) {
  switch (basis) {
    case EulerBasis::ZYZ:
      return Unitary2::identity();
    case EulerBasis::ZXZ:
      return rz_matrix(-kPi / 2);
    case EulerBasis::XYX:
      return ry_matrix(kPi / 2);
  }
  return Unitary2::identity();
}

Unitary2 rotation(std::string_view axis, double theta) {
  if (axis == "rz") return rz_matrix(theta);
  if (axis == "ry") return ry_matrix(theta);
  return rx_matrix(theta);
}

/// Normalizes `theta` and folds the sign flip R(t + 2pi) = -R(t) into `phase`.
void normalize_rotation(double& theta, double& phase) {
  const double wrapped = normalize_angle(theta);
  const double turns = std::round((theta - wrapped) / (2 * kPi));
  theta = wrapped;
  phase += kPi * turns;
}

}  // namespace

std::string_view to_string(EulerBasis basis) {
  switch (basis) {
    case EulerBasis::ZYZ:
      return "ZYZ";
    case EulerBasis::ZXZ:
      return "ZXZ";
    case EulerBasis::XYX:
      return "XYX";
  }
  return "?";
}

std::string_view outer_axis(EulerBasis basis) {
  return basis == EulerBasis::XYX ? "rx" : "rz";
}

std::string_view inner_axis(EulerBasis basis) {
  switch (basis) {
    case EulerBasis::ZYZ:
      return "ry";
    case EulerBasis::ZXZ:
      return "rx";
    case EulerBasis::XYX:
      return "ry";
  }
  return "ry";
}

double normalize_angle(double theta) {
  double r = std::fmod(theta + kPi, 2 * kPi);
  if (r <= 0.0) r += 2 * kPi;
  return r - kPi;
}

EulerDecomposition euler_decompose(const Unitary2& u, EulerBasis basis,
                                   double tolerance) {
  const double err = u.unitarity_error();
  if (!(err <= tolerance)) {
    throw NotUnitary("matrix is not unitary (error " + std::to_string(err) + ")");
  }
  const Unitary2 w = frame(basis);
  const Unitary2 v = w.adjoint() * u * w;

  // v = e^{i alpha} su with det(su) = 1, then read the ZYZ angles off su.
  const Complex det = v.determinant();
  const double alpha = std::arg(det) / 2;
  const Unitary2 su = std::exp(Complex{0.0, -alpha}) * v;

  EulerDecomposition d;
  d.basis = basis;
  d.gamma = 2 * std::atan2(std::abs(su(1, 0)), std::abs(su(0, 0)));
  const double sum_half = std::arg(su(1, 1));
  const double diff_half = std::arg(su(1, 0));
  d.beta = sum_half + diff_half;
  d.delta = sum_half - diff_half;
  d.global_phase = alpha;
  normalize_rotation(d.beta, d.global_phase);
  normalize_rotation(d.delta, d.global_phase);
  d.global_phase = normalize_angle(d.global_phase);
  return d;
}

Unitary2 reconstruct(const EulerDecomposition& d) {
  const Unitary2 outer_b = rotation(outer_axis(d.basis), d.beta);
  const Unitary2 inner = rotation(inner_axis(d.basis), d.gamma);
  const Unitary2 outer_d = rotation(outer_axis(d.basis), d.delta);
  return std::exp(Complex{0.0, d.global_phase}) * (outer_b * inner * outer_d);
}

}  // namespace qcc::opt

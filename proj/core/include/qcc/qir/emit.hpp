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

#include <set>
#include <string>
#include <string_view>

#include "qcc/ir/program.hpp"

namespace qcc::qir {

struct QirModule {
  std::string text;
  std::string kernel_name;
  /// Full `declare ...` lines of every runtime/intrinsic function used.
  std::set<std::string> declared_externals;
};

/**
 * @brief Lowers a finalized program to textual QIR.
 *
 * Qalloc becomes `__quantum__rt__qubit_allocate_array`, immediately followed
 * by one `__quantum__rt__array_get_element_ptr` + `bitcast` to `%Qubit*` for
 * every qubit of the register the program uses; the resulting handles are
 * reused by all later calls. Gates map to `__quantum__qis__<name>` with the
 * rotation angles first, measurement to `__quantum__qis__m`. Conditional
 * regions become a branch on `__quantum__rt__result_equal` comparisons of
 * the latest results stored into the creg.
 *
 * The module header records the creg layout and, positionally, the creg bit
 * each measurement writes, as `; qcc.` comments. Throws EmitError for gates
 * with no QIS mapping.
 */
QirModule emit_qir(const ir::QuantumProgram& program, std::string_view kernel_name);

/// LLVM textual form of a double: `%.6e` when that round-trips exactly,
/// otherwise the 16-digit hexadecimal bit pattern (`0x3FE0...`).
std::string format_double(double value);

/// Inverse of format_double; accepts any decimal or LLVM hex double.
double parse_double(std::string_view text);

}  // namespace qcc::qir

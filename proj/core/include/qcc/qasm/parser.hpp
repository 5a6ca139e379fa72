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

#include <string_view>

#include "qcc/qasm/ast.hpp"

namespace qcc::qasm {

/**
 * @brief Parses and validates OpenQASM 2.0 source.
 *
 * `include "qelib1.inc"` is resolved against the built-in gate table; no file
 * is read. Gate macros are recorded, not inlined. Top-level gate parameters
 * are evaluated to doubles.
 *
 * Throws SyntaxError for malformed input and SemanticError for undeclared or
 * redeclared names, out-of-range indices, wrong arity, unsupported versions,
 * unknown includes and `opaque` declarations.
 */
QasmAst parse_qasm(std::string_view source);

}  // namespace qcc::qasm

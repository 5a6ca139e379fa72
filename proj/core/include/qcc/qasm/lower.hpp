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

#include "qcc/ir/program.hpp"
#include "qcc/qasm/ast.hpp"

namespace qcc::qasm {

/// Inlines gate macros, expands whole-register operands in ascending index
/// order and emits a finalized program. Recursive macros raise SemanticError.
ir::QuantumProgram lower_ast_to_ir(const QasmAst& ast);

/// parse_qasm followed by lower_ast_to_ir.
ir::QuantumProgram compile_qasm(std::string_view source);

}  // namespace qcc::qasm

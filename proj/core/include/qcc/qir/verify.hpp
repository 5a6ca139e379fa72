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

#include <string>
#include <string_view>
#include <vector>

#include "qcc/qir/emit.hpp"

namespace qcc::qir {

struct QirDiagnostic {
  int line = 0;
  std::string message;
};

/// Structural lint of textual QIR: every SSA value defined once and before
/// use, every call target declared or defined, balanced brackets.
std::vector<QirDiagnostic> verify_qir_text(std::string_view text);
std::vector<QirDiagnostic> verify_qir_text(const QirModule& module);

}  // namespace qcc::qir

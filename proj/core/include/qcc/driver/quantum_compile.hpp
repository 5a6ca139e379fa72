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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qcc/ir/metrics.hpp"
#include "qcc/opt/native_gates.hpp"
#include "qcc/route/coupling.hpp"
#include "qcc/route/sabre.hpp"

namespace qcc::driver {

enum class LayoutMode { Identity, Sabre };

struct QuantumOptions {
  int opt_level = 3;
  opt::NativeGateSet native;
  std::optional<route::CouplingGraph> coupling;
  LayoutMode layout = LayoutMode::Sabre;
  std::uint64_t seed = 0;
  int sabre_iterations = 3;
  /// Runner command template baked into the wrapper (`{input}` = QIR path).
  std::string runner_cmd;
  /// Adds a `main` to the wrapper.
  bool standalone = false;
};

struct QuantumArtifacts {
  std::string kernel_name;
  std::string qir;
  std::string wrapper_source;
  ir::GateCounts metrics;
  /// Present when routing ran.
  std::optional<std::string> routing_json;
};

/// `circuit` -> `circuit`, `2-bell` -> `_2_bell`.
std::string c_identifier(std::string_view stem);

/**
 * @brief The in-process quantum pipeline for one source.
 *
 * parse, lower, optimize, optionally route (swaps are decomposed afterwards
 * when swap is not native) and emit. Nothing touches the file system; errors
 * propagate with their source spans.
 */
QuantumArtifacts compile_quantum(std::string_view source, std::string_view stem,
                                 const QuantumOptions& options);

std::string generate_wrapper(std::string_view qir, std::string_view stem,
                             std::string_view runner_cmd, bool standalone);

}  // namespace qcc::driver

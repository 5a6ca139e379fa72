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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcc::driver {

/**
 * @brief External commands used by the driver.
 *
 * Each template is split on whitespace into an argv; no shell is involved.
 * A token that is exactly `{input}` or `{flags}` expands to zero or more
 * arguments, other occurrences of `{input}`, `{output}`, `{flags}` and `{arch}`
 * are substituted inside the token.
 */
struct ToolchainConfig {
  std::string cxx_cmd = "c++ -c {input} -o {output} {flags}";
  std::string cuda_cmd = "nvcc -c {input} -o {output} -arch={arch} {flags}";
  std::string mpi_cmd = "mpicxx -c {input} -o {output} {flags}";
  std::string linker_cmd = "c++ {input} -o {output} {flags}";
  /// Command the generated wrapper runs on the QIR file; `{input}` is the
  /// QIR path. Empty selects `<this qcc> simulate --ignore-measurements`.
  std::string runner_cmd;
  std::string cuda_arch = "sm_70";

  /// Throws ConfigError when a template lacks `{input}` or `{output}`.
  void validate() const;
};

/// Reads `{"cxx": ..., "cuda": ..., "mpi": ..., "linker": ..., "runner": ...,
/// "cuda_arch": ...}`; absent keys keep their defaults. Throws ConfigError.
ToolchainConfig parse_toolchain_config(std::string_view json_text,
                                       ToolchainConfig base = {});
ToolchainConfig load_toolchain_config(const std::string& path, ToolchainConfig base = {});

/// Defaults, then the file named by QCC_TOOLCHAIN, then `explicit_path`.
ToolchainConfig resolve_toolchain(const std::optional<std::string>& explicit_path);

struct TemplateArgs {
  std::vector<std::string> inputs;
  std::string output;
  std::vector<std::string> flags;
  std::string arch;
};

std::vector<std::string> expand_template(std::string_view tmpl, const TemplateArgs& args);

/// Whether argv[0] names an executable file, directly or through PATH.
bool command_resolvable(const std::string& program);

/// Shell-style rendering of an argv for logs and dry runs.
std::string render_command(const std::vector<std::string>& argv);

}  // namespace qcc::driver

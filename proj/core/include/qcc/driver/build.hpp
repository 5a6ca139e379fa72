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

#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcc/driver/quantum_compile.hpp"
#include "qcc/driver/toolchain.hpp"
#include "qcc/error.hpp"

namespace qcc::driver {

enum class InputKind { Cxx, Cuda, Mpi, Qasm };

const char* to_string(InputKind kind);

/// Which quantum artifacts to write. Any explicit mode means emit-only.
enum class EmitMode { Qir, Metrics, All };

struct CompileTask {
  std::string input;
  InputKind kind = InputKind::Cxx;
  /// Classical compile, or for qasm tasks the wrapper compile. Empty in
  /// emit-only mode.
  std::vector<std::string> command;
  /// Object file fed to the link step.
  std::string output;

  // qasm tasks only
  std::string stem;
  std::string qir_path;
  std::string wrapper_path;
  std::string metrics_path;
  std::string routing_path;
};

struct LinkStep {
  std::vector<std::string> command;
  std::vector<std::string> inputs;
  std::string output;
};

struct BuildPlan {
  std::vector<CompileTask> tasks;
  std::optional<LinkStep> link;
  /// Only the quantum pipeline runs; nothing is spawned.
  bool emit_only = false;
  /// Unset in the default emit-only mode, which writes QIR and metrics.
  std::optional<EmitMode> emit;
};

struct PlanOptions {
  std::string output = "a.out";
  bool mpi_all = false;
  /// Sources compiled with the MPI command regardless of extension.
  std::set<std::string> mpi_files;
  bool standalone = false;
  std::optional<EmitMode> emit;
  /// Extra arguments bound to `{flags}` in every template.
  std::vector<std::string> flags;
};

/// Throws MissingFile or UnknownFileType before anything is planned.
BuildPlan classify_inputs(const std::vector<std::string>& paths, const PlanOptions& options,
                          const ToolchainConfig& config);

enum class StepStatus { Succeeded, Failed, Skipped, Planned };

const char* to_string(StepStatus status);

struct StepReport {
  /// Input path, or "link".
  std::string name;
  std::vector<std::string> command;
  StepStatus status = StepStatus::Planned;
  double seconds = 0.0;
  int exit_code = 0;
  std::string stderr_text;
};

struct BuildReport {
  std::vector<StepReport> steps;
  std::optional<std::string> artifact;
  std::vector<std::string> written_files;
  int processes_spawned = 0;

  [[nodiscard]] std::string to_json() const;
};

/// A pipeline error rendered against its source file.
class SourceDiagnostic : public Error {
 public:
  SourceDiagnostic(const std::string& file, const Error& cause)
      : Error(cause.format(file), cause.span()), file_(file) {}

  [[nodiscard]] const std::string& file() const noexcept { return file_; }

 private:
  std::string file_;
};

/// Raised when an external tool exits nonzero; carries the partial report.
class ToolFailure : public Error {
 public:
  ToolFailure(std::string task, int exit_code, std::string stderr_text, BuildReport report);

  [[nodiscard]] const std::string& task() const noexcept { return task_; }
  [[nodiscard]] int exit_code() const noexcept { return exit_code_; }
  [[nodiscard]] const std::string& stderr_text() const noexcept { return stderr_; }
  [[nodiscard]] const BuildReport& report() const noexcept { return report_; }

 private:
  std::string task_;
  int exit_code_;
  std::string stderr_;
  BuildReport report_;
};

struct ProcessResult {
  int exit_code = 0;
  std::string stderr_text;
};

using ProcessRunner = std::function<ProcessResult(const std::vector<std::string>&)>;

/// posix_spawnp with stderr captured; stdout is inherited.
ProcessResult spawn_process(const std::vector<std::string>& argv);

struct ExecuteOptions {
  bool dry_run = false;
  /// Defaults to spawn_process.
  ProcessRunner runner;
  /// Receives one line per command in dry-run mode.
  std::ostream* echo = nullptr;
  QuantumOptions quantum;
};

/**
 * @brief Runs a plan: quantum pipelines first, then compile tasks in input
 * order, then the link.
 *
 * Every quantum source is compiled before any file is written, so a bad
 * source leaves no outputs behind. Outside dry runs, each command's program
 * must resolve (ConfigError otherwise) before the first spawn. A failing tool
 * raises ToolFailure and the link is not attempted.
 */
BuildReport execute_plan(const BuildPlan& plan, const ExecuteOptions& options);

}  // namespace qcc::driver

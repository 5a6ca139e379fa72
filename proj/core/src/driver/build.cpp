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
#include "qcc/driver/build.hpp"

#include <fcntl.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

extern char** environ;

namespace qcc::driver {

namespace fs = std::filesystem;

const char* to_string(InputKind kind) {
  switch (kind) {
    case InputKind::Cxx:
      return "cxx";
    case InputKind::Cuda:
      return "cuda";
    case InputKind::Mpi:
      return "mpi";
    case InputKind::Qasm:
      return "qasm";
  }
  return "unknown";
}

const char* to_string(StepStatus status) {
  switch (status) {
    case StepStatus::Succeeded:
      return "succeeded";
    case StepStatus::Failed:
      return "failed";
    case StepStatus::Skipped:
      return "skipped";
    case StepStatus::Planned:
      return "planned";
  }
  return "unknown";
}

ToolFailure::ToolFailure(std::string task, int exit_code, std::string stderr_text,
                         BuildReport report)
    : Error(task + ": tool exited with status " + std::to_string(exit_code) +
            (stderr_text.empty() ? std::string() : "\n" + stderr_text)),
      task_(std::move(task)),
      exit_code_(exit_code),
      stderr_(std::move(stderr_text)),
      report_(std::move(report)) {}

std::string BuildReport::to_json() const {
  nlohmann::ordered_json j;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : steps) {
    nlohmann::ordered_json step;
    step["name"] = s.name;
    step["command"] = render_command(s.command);
    step["status"] = driver::to_string(s.status);
    step["seconds"] = s.seconds;
    step["exit_code"] = s.exit_code;
    j["steps"].push_back(std::move(step));
  }
  j["artifact"] = artifact ? nlohmann::ordered_json(*artifact) : nlohmann::ordered_json();
  j["processes_spawned"] = processes_spawned;
  return j.dump(2);
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

InputKind kind_for(const fs::path& path, const PlanOptions& options) {
  const std::string ext = lower(path.extension().string());
  const bool mpi = options.mpi_all || options.mpi_files.contains(path.string());
  if (ext == ".c" || ext == ".cc" || ext == ".cpp" || ext == ".cxx") {
    return mpi ? InputKind::Mpi : InputKind::Cxx;
  }
  if (ext == ".cu") return InputKind::Cuda;
  if (ext == ".qasm") return InputKind::Qasm;
  throw UnknownFileType("'" + path.string() + "': unrecognized file type '" + ext + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  const fs::path parent = fs::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty()) fs::create_directories(parent, ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace

BuildPlan classify_inputs(const std::vector<std::string>& paths, const PlanOptions& options,
                          const ToolchainConfig& config) {
  if (paths.empty()) throw MissingFile("no input files");
  BuildPlan plan;
  std::vector<InputKind> kinds;
  for (const auto& p : paths) {
    if (!fs::is_regular_file(p)) throw MissingFile("'" + p + "': no such file");
    kinds.push_back(kind_for(p, options));
  }
  const bool all_quantum = std::all_of(kinds.begin(), kinds.end(),
                                       [](InputKind k) { return k == InputKind::Qasm; });
  plan.emit = options.emit;
  plan.emit_only = options.emit.has_value() || (all_quantum && !options.standalone);

  const fs::path out_dir = fs::path(options.output).parent_path();
  auto in_out_dir = [&](const std::string& name) { return (out_dir / name).string(); };
  std::set<std::string> outputs;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    CompileTask task;
    task.input = paths[i];
    task.kind = kinds[i];
    const fs::path path(paths[i]);
    std::string source = paths[i];
    if (task.kind == InputKind::Qasm) {
      task.stem = path.stem().string();
      task.qir_path = in_out_dir(task.stem + ".qir.ll");
      task.wrapper_path = in_out_dir(task.stem + ".wrapper.cpp");
      task.metrics_path = in_out_dir(task.stem + ".metrics.json");
      task.routing_path = in_out_dir(task.stem + ".routing.json");
      task.output = in_out_dir(task.stem + ".wrapper.o");
      source = task.wrapper_path;
    } else {
      task.output = in_out_dir(path.filename().string() + ".o");
    }
    if (!outputs.insert(task.output).second) {
      throw ConfigError("two inputs map to the same object file '" + task.output + "'");
    }
    if (!plan.emit_only) {
      const TemplateArgs args{{source}, task.output, options.flags, config.cuda_arch};
      const std::string* tmpl = &config.cxx_cmd;
      if (task.kind == InputKind::Cuda) tmpl = &config.cuda_cmd;
      if (task.kind == InputKind::Mpi) tmpl = &config.mpi_cmd;
      task.command = expand_template(*tmpl, args);
    }
    plan.tasks.push_back(std::move(task));
  }
  if (!plan.emit_only) {
    LinkStep link;
    for (const auto& t : plan.tasks) link.inputs.push_back(t.output);
    link.output = options.output;
    link.command = expand_template(
        config.linker_cmd, TemplateArgs{link.inputs, link.output, options.flags, config.cuda_arch});
    plan.link = std::move(link);
  }
  return plan;
}

ProcessResult spawn_process(const std::vector<std::string>& argv) {
  if (argv.empty()) return {127, "empty command"};
  int pipefd[2];
  if (::pipe(pipefd) != 0) return {127, std::string("pipe: ") + std::strerror(errno)};
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addclose(&actions, pipefd[0]);
  posix_spawn_file_actions_adddup2(&actions, pipefd[1], STDERR_FILENO);
  posix_spawn_file_actions_addclose(&actions, pipefd[1]);

  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);
  pid_t pid = 0;
  const int rc = posix_spawnp(&pid, args[0], &actions, nullptr, args.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  ::close(pipefd[1]);
  if (rc != 0) {
    ::close(pipefd[0]);
    return {127, "cannot execute '" + argv[0] + "': " + std::strerror(rc)};
  }
  ProcessResult result;
  char buf[4096];
  for (ssize_t n; (n = ::read(pipefd[0], buf, sizeof buf)) != 0;) {
    if (n < 0) {
      if (errno == EINTR) continue;
      break;
    }
    result.stderr_text.append(buf, static_cast<std::size_t>(n));
  }
  ::close(pipefd[0]);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    result.exit_code = 128 + WTERMSIG(status);
  }
  return result;
}

BuildReport execute_plan(const BuildPlan& plan, const ExecuteOptions& options) {
  using Clock = std::chrono::steady_clock;
  BuildReport report;

  // Quantum pipelines run in-process and all succeed before anything is written.
  struct Pending {
    const CompileTask* task;
    QuantumArtifacts artifacts;
    double seconds;
  };
  std::vector<Pending> quantum;
  if (!options.dry_run) {
    for (const auto& task : plan.tasks) {
      if (task.kind != InputKind::Qasm) continue;
      const auto start = Clock::now();
      const std::string source = read_file(task.input);
      try {
        QuantumOptions q = options.quantum;
        // a standalone wrapper only makes sense when this build links it
        q.standalone = q.standalone && plan.link.has_value();
        quantum.push_back({&task, compile_quantum(source, task.stem, q), 0.0});
      } catch (const Error& e) {
        throw SourceDiagnostic(task.input, e);
      }
      quantum.back().seconds =
          std::chrono::duration<double>(Clock::now() - start).count();
    }
    const bool default_emit = !plan.emit.has_value();
    const EmitMode mode = plan.emit.value_or(EmitMode::All);
    for (const auto& p : quantum) {
      auto put = [&](const std::string& path, const std::string& content) {
        write_file(path, content);
        report.written_files.push_back(path);
      };
      if (mode != EmitMode::Metrics) put(p.task->qir_path, p.artifacts.qir);
      if (mode != EmitMode::Qir) {
        put(p.task->metrics_path, ir::to_json(p.artifacts.metrics) + "\n");
        if (p.artifacts.routing_json) put(p.task->routing_path, *p.artifacts.routing_json);
      }
      if (!plan.emit_only || (!default_emit && mode == EmitMode::All)) {
        put(p.task->wrapper_path, p.artifacts.wrapper_source);
      }
    }
  }

  if (plan.emit_only) {
    for (const auto& p : quantum) {
      report.steps.push_back({p.task->input, {}, StepStatus::Succeeded, p.seconds, 0, {}});
    }
    return report;
  }

  std::vector<std::pair<std::string, const std::vector<std::string>*>> steps;
  for (const auto& t : plan.tasks) steps.emplace_back(t.input, &t.command);
  if (plan.link) steps.emplace_back("link", &plan.link->command);

  if (!options.dry_run) {
    for (const auto& [name, cmd] : steps) {
      if (cmd->empty() || !command_resolvable(cmd->front())) {
        throw ConfigError(name + ": command '" + (cmd->empty() ? "" : cmd->front()) +
                          "' not found");
      }
    }
  }

  const ProcessRunner run = options.runner ? options.runner : ProcessRunner(spawn_process);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& [name, cmd] = steps[i];
    StepReport step{name, *cmd, StepStatus::Planned, 0.0, 0, {}};
    if (options.dry_run) {
      if (options.echo != nullptr) *options.echo << render_command(*cmd) << "\n";
      report.steps.push_back(std::move(step));
      continue;
    }
    const auto start = Clock::now();
    const ProcessResult result = run(*cmd);
    ++report.processes_spawned;
    step.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    for (const auto& q : quantum) {
      if (q.task->input == name) step.seconds += q.seconds;
    }
    step.exit_code = result.exit_code;
    step.stderr_text = result.stderr_text;
    step.status = result.exit_code == 0 ? StepStatus::Succeeded : StepStatus::Failed;
    report.steps.push_back(step);
    if (result.exit_code != 0) {
      for (std::size_t j = i + 1; j < steps.size(); ++j) {
        report.steps.push_back(
            {steps[j].first, *steps[j].second, StepStatus::Skipped, 0.0, 0, {}});
      }
      throw ToolFailure(name, result.exit_code, result.stderr_text, std::move(report));
    }
  }
  if (!options.dry_run && plan.link) report.artifact = plan.link->output;
  return report;
}

}  // namespace qcc::driver

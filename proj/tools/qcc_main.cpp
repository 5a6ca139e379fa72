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
#include <unistd.h>

#include <climits>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcc/driver/build.hpp"
#include "qcc/driver/quantum_compile.hpp"
#include "qcc/driver/toolchain.hpp"
#include "qcc/error.hpp"
#include "qcc/extract/extractor.hpp"
#include "qcc/ir/metrics.hpp"
#include "qcc/opt/passes.hpp"
#include "qcc/qasm/lower.hpp"
#include "qcc/route/coupling.hpp"
#include "qcc/sim/statevector.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qcc;

constexpr int kExitDiagnostics = 1;
constexpr int kExitToolFailure = 2;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("'" + path + "': no such file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_qir(const std::string& path) {
  return path.ends_with(".ll");
}

std::string self_path(const char* argv0) {
  char buf[PATH_MAX];
  const ssize_t n = ::readlink("/proc/self/exe", buf, sizeof buf - 1);
  if (n > 0) return std::string(buf, static_cast<std::size_t>(n));
  return fs::absolute(argv0).string();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (const char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

struct KernelChoice {
  extract::ExtractedCircuit circuit;
  extract::ResultLayout layout;
};

KernelChoice extract_kernel(const std::string& text, const std::string& name) {
  const auto kernels = extract::find_quantum_kernels(text);
  if (kernels.empty()) throw ExtractionError("module contains no quantum kernel");
  const extract::KernelFunction* chosen = &kernels.front();
  if (!name.empty()) {
    chosen = nullptr;
    for (const auto& k : kernels) {
      if (k.name == name) chosen = &k;
    }
    if (chosen == nullptr) throw ExtractionError("no kernel named '" + name + "'");
  }
  auto layout = extract::parse_result_layout(text);
  auto circuit = extract::extract_circuit(chosen->text, layout, chosen->first_line);
  return {std::move(circuit), std::move(layout)};
}

struct BuildArgs {
  std::vector<std::string> inputs;
  std::string output = "a.out";
  std::optional<std::string> cuda_arch;
  bool mpi = false;
  std::vector<std::string> mpi_files;
  std::optional<std::string> coupling;
  std::string layout = "sabre";
  std::uint64_t seed = 0;
  int sabre_iterations = 3;
  int opt_level = 3;
  std::optional<std::string> native_gates;
  std::optional<std::string> emit;
  bool dry_run = false;
  std::optional<std::string> toolchain_config;
  bool standalone = false;
};

int run_build(const BuildArgs& a, const std::string& self) {
  driver::ToolchainConfig config = driver::resolve_toolchain(a.toolchain_config);
  if (a.cuda_arch) config.cuda_arch = *a.cuda_arch;

  driver::PlanOptions plan_options;
  plan_options.output = a.output;
  plan_options.mpi_all = a.mpi;
  plan_options.mpi_files.insert(a.mpi_files.begin(), a.mpi_files.end());
  plan_options.standalone = a.standalone;
  if (a.emit) {
    if (*a.emit == "qir") {
      plan_options.emit = driver::EmitMode::Qir;
    } else if (*a.emit == "metrics") {
      plan_options.emit = driver::EmitMode::Metrics;
    } else {
      plan_options.emit = driver::EmitMode::All;
    }
  }
  const driver::BuildPlan plan = driver::classify_inputs(a.inputs, plan_options, config);

  driver::ExecuteOptions exec;
  exec.dry_run = a.dry_run;
  exec.echo = &std::cout;
  auto& q = exec.quantum;
  q.opt_level = a.opt_level;
  if (a.native_gates) q.native = opt::NativeGateSet::parse(*a.native_gates);
  if (a.coupling) q.coupling = route::load_coupling_graph(*a.coupling);
  q.layout = a.layout == "identity" ? driver::LayoutMode::Identity : driver::LayoutMode::Sabre;
  q.seed = a.seed;
  q.sabre_iterations = a.sabre_iterations;
  q.standalone = a.standalone;
  q.runner_cmd = config.runner_cmd.empty()
                     ? shell_quote(self) + " simulate --ignore-measurements {input}"
                     : config.runner_cmd;

  const driver::BuildReport report = driver::execute_plan(plan, exec);
  if (!a.dry_run) {
    for (const auto& s : report.steps) {
      std::cerr << "qcc: " << s.name << ": " << driver::to_string(s.status) << "\n";
    }
    if (report.artifact) std::cerr << "qcc: wrote " << *report.artifact << "\n";
  }
  return 0;
}

int run_extract(const std::string& file, const std::string& kernel) {
  const auto chosen = extract_kernel(read_text(file), kernel);
  std::cout << extract::gates_to_json(chosen.circuit.gates) << "\n";
  return 0;
}

int run_simulate(const std::string& file, std::optional<int> qubits, bool ignore_measurements) {
  const std::string text = read_text(file);
  std::optional<sim::StateVector> state;
  if (is_qir(file)) {
    const auto chosen = extract_kernel(text, "");
    state = sim::simulate(chosen.circuit.gates, qubits.value_or(chosen.circuit.num_qubits),
                          ignore_measurements);
  } else {
    const auto program = qasm::compile_qasm(text);
    state = sim::simulate(program, qubits.value_or(-1), ignore_measurements);
  }
  nlohmann::json j;
  j["num_qubits"] = state->num_qubits();
  j["amplitudes"] = nlohmann::json::array();
  for (const auto& amp : state->amplitudes()) {
    j["amplitudes"].push_back({amp.real(), amp.imag()});
  }
  std::cout << j.dump() << "\n";
  return 0;
}

int run_metrics(const std::string& file, std::optional<int> opt_level,
                const std::optional<std::string>& native) {
  const std::string text = read_text(file);
  ir::QuantumProgram program;
  if (is_qir(file)) {
    const auto chosen = extract_kernel(text, "");
    program = extract::to_program(chosen.circuit, chosen.layout);
  } else {
    program = qasm::compile_qasm(text);
  }
  if (opt_level) {
    const opt::NativeGateSet set = native ? opt::NativeGateSet::parse(*native) : opt::NativeGateSet{};
    program = opt::optimize(program, *opt_level, set);
  }
  std::cout << ir::to_json(ir::gate_counts(program)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcc: OpenQASM to QIR compiler and heterogeneous build driver"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Compile and link quantum and classical sources");
  build_cmd->add_option("inputs", build.inputs, "Source files (.c .cc .cpp .cu .qasm)")
      ->required();
  build_cmd->add_option("-o,--output", build.output, "Output executable");
  build_cmd->add_option("--cuda-arch", build.cuda_arch, "CUDA architecture, e.g. sm_80");
  build_cmd->add_flag("--mpi", build.mpi, "Compile every C/C++ source with the MPI toolchain");
  build_cmd->add_option("--mpi-file", build.mpi_files, "Compile this source with MPI");
  build_cmd->add_option("--coupling", build.coupling, "Coupling graph JSON");
  build_cmd->add_option("--layout", build.layout, "Initial placement")
      ->check(CLI::IsMember({"identity", "sabre"}));
  build_cmd->add_option("--seed", build.seed, "Seed for the initial placement");
  build_cmd->add_option("--sabre-iterations", build.sabre_iterations, "Layout refinement rounds")
      ->check(CLI::NonNegativeNumber);
  build_cmd->add_option("--opt-level", build.opt_level, "Optimization level")
      ->check(CLI::Range(0, 3));
  build_cmd->add_option("--native-gates", build.native_gates, "Comma-separated native gates");
  build_cmd->add_option("--emit", build.emit, "Write quantum artifacts only")
      ->check(CLI::IsMember({"qir", "metrics", "all"}));
  build_cmd->add_flag("--dry-run", build.dry_run, "Print commands without running them");
  build_cmd->add_option("--toolchain-config", build.toolchain_config, "Toolchain JSON");
  build_cmd->add_flag("--standalone", build.standalone,
                      "Link quantum-only builds into a runnable executable");

  std::string extract_file;
  std::string extract_kernel_name;
  auto* extract_cmd = app.add_subcommand("extract", "Print the gate list of a QIR kernel");
  extract_cmd->add_option("file", extract_file, "QIR text file")->required();
  extract_cmd->add_option("--kernel", extract_kernel_name, "Kernel to extract");

  std::string sim_file;
  std::optional<int> sim_qubits;
  bool sim_ignore = false;
  auto* sim_cmd = app.add_subcommand("simulate", "Print the final statevector as JSON");
  sim_cmd->add_option("file", sim_file, "QASM or QIR file")->required();
  sim_cmd->add_option("--qubits", sim_qubits, "Number of qubits to simulate");
  sim_cmd->add_flag("--ignore-measurements", sim_ignore,
                    "Skip measure, reset and conditional operations");

  std::string metrics_file;
  std::optional<int> metrics_level;
  std::optional<std::string> metrics_native;
  auto* metrics_cmd = app.add_subcommand("metrics", "Print gate counts and depth as JSON");
  metrics_cmd->add_option("file", metrics_file, "QASM or QIR file")->required();
  metrics_cmd->add_option("--opt-level", metrics_level, "Optimize before counting")
      ->check(CLI::Range(0, 3));
  metrics_cmd->add_option("--native-gates", metrics_native, "Comma-separated native gates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDiagnostics;
  }

  std::string current_file;
  try {
    if (*build_cmd) return run_build(build, self_path(argv[0]));
    if (*extract_cmd) {
      current_file = extract_file;
      return run_extract(extract_file, extract_kernel_name);
    }
    if (*sim_cmd) {
      current_file = sim_file;
      return run_simulate(sim_file, sim_qubits, sim_ignore);
    }
    if (*metrics_cmd) {
      current_file = metrics_file;
      return run_metrics(metrics_file, metrics_level, metrics_native);
    }
  } catch (const driver::ToolFailure& e) {
    std::cerr << "qcc: error: " << e.what() << "\n";
    return kExitToolFailure;
  } catch (const driver::SourceDiagnostic& e) {
    std::cerr << e.what() << "\n";
    return kExitDiagnostics;
  } catch (const Error& e) {
    std::cerr << (current_file.empty() ? std::string("qcc: error: ") + e.what()
                                       : e.format(current_file))
              << "\n";
    return kExitDiagnostics;
  }
  return kExitDiagnostics;
}

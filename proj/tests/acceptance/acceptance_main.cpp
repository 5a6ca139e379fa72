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
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here and never relaxed at run time.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcc/driver/build.hpp"
#include "qcc/error.hpp"
#include "qcc/extract/extractor.hpp"
#include "qcc/ir/dag.hpp"
#include "qcc/ir/metrics.hpp"
#include "qcc/opt/euler.hpp"
#include "qcc/opt/gate_matrix.hpp"
#include "qcc/opt/passes.hpp"
#include "qcc/qasm/lower.hpp"
#include "qcc/qir/emit.hpp"
#include "qcc/route/coupling.hpp"
#include "qcc/route/sabre.hpp"
#include "qcc/sim/statevector.hpp"
#include "test_support.hpp"

namespace {

using namespace qcc;
namespace fs = std::filesystem;

constexpr int kCorpusSize = 500;
constexpr double kStateTol = 1e-9;
constexpr double kEulerTol = 1e-9;
constexpr double kHadamardTol = 1e-12;
constexpr double kParamTol = 1e-12;
constexpr double kSemanticBudgetSeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// 2-5 qubits, 5-60 qelib1 gates, no measurements.
const std::vector<ir::QuantumProgram>& corpus() {
  static const std::vector<ir::QuantumProgram> programs = [] {
    std::mt19937_64 rng(20260101);
    std::vector<ir::QuantumProgram> out;
    for (int k = 0; k < kCorpusSize; ++k) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const int gates = 5 + static_cast<int>(rng() % 56);
      out.push_back(testing::random_circuit(rng, n, gates));
    }
    return out;
  }();
  return programs;
}

std::vector<ir::Inst> insts(const ir::QuantumProgram& p) {
  std::vector<ir::Inst> out;
  for (const auto& op : ir::program_body(p)) {
    if (const auto* g = std::get_if<ir::Inst>(&op)) out.push_back(*g);
  }
  return out;
}

route::CouplingGraph t_shape() { return route::CouplingGraph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}); }

Outcome semantic_preservation() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int checked = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& p = corpus()[i];
    const auto reference = sim::simulate(p);
    for (int level = 1; level <= 3; ++level) {
      const auto optimized = opt::optimize(p, level);
      if (!sim::equiv_up_to_global_phase(reference, sim::simulate(optimized), kStateTol)) {
        o.fail("circuit " + std::to_string(i) + " level " + std::to_string(level) + " changed the state");
      }
      ++checked;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= kSemanticBudgetSeconds) o.fail("took " + std::to_string(seconds) + " s");
  if (o.pass) {
    std::ostringstream ss;
    ss << checked << " optimizations equivalent within 1e-9 in " << seconds << " s";
    o.detail = ss.str();
  }
  return o;
}

Outcome routing_validity() {
  Outcome o;
  const std::vector<std::pair<std::string, route::CouplingGraph>> graphs = {
      {"linear-5", route::linear_graph(5)}, {"ring-5", route::ring_graph(5)}, {"T-5", t_shape()}};
  std::size_t two_qubit = 0;
  std::size_t routed = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    // ccx has no routing rule, so circuits enter routing in native form
    const auto p = opt::optimize(corpus()[i], 0);
    const auto dag = ir::build_dag(p);
    const auto reference = sim::simulate(p);
    for (const auto& [name, g] : graphs) {
      route::RouteOptions options;
      options.seed = i;
      const auto r = route::route_program(p, g, options);
      const std::string tag = "circuit " + std::to_string(i) + " on " + name;
      for (const auto& gate : insts(r.program)) {
        if (gate.qubits.size() != 2) continue;
        ++two_qubit;
        if (!g.adjacent(gate.qubits[0].logical_id, gate.qubits[1].logical_id)) {
          o.fail(tag + ": " + gate.gate + " off the coupling graph");
        }
      }
      const auto violation = testing::routing_violation(dag, r.routing, g);
      if (!violation.empty()) o.fail(tag + ": " + violation);
      const auto expected = sim::permute_qubits(sim::pad_qubits(reference, g.n_physical()),
                                                r.routing.final_layout.as_permutation());
      if (!sim::equiv_up_to_global_phase(expected, sim::simulate(r.program), kStateTol)) {
        o.fail(tag + ": permuted state differs");
      }
      ++routed;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(routed) + " routings, " + std::to_string(two_qubit) +
               " two-qubit gates all on edges, states match within 1e-9";
  }
  return o;
}

Outcome euler_reconstruction() {
  Outcome o;
  std::mt19937_64 rng(777);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const auto u = testing::random_unitary(rng);
    for (opt::EulerBasis b : opt::kAllBases) {
      const double err = ir::max_abs_diff(opt::reconstruct(opt::euler_decompose(u, b)), u);
      worst = std::max(worst, err);
      if (err > kEulerTol) o.fail("unitary " + std::to_string(k) + " basis " +
                                  std::string(opt::to_string(b)) + " error " + std::to_string(err));
    }
  }
  const auto h = opt::gate_matrix("h", {});
  const double h_err = ir::phase_insensitive_distance(
      opt::reconstruct(opt::euler_decompose(h, opt::EulerBasis::ZYZ)), h);
  if (h_err > kHadamardTol) o.fail("H via ZYZ error " + std::to_string(h_err));
  if (o.pass) {
    std::ostringstream ss;
    ss << "1500 reconstructions, worst " << worst << "; H error " << h_err;
    o.detail = ss.str();
  }
  return o;
}

std::string compare_round_trip(const ir::QuantumProgram& p, const extract::ExtractedCircuit& c) {
  const auto g = insts(p);
  if (c.gates.size() != g.size()) return "gate count differs";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (c.gates[i].name != g[i].gate) return "name differs at " + std::to_string(i);
    std::vector<int> ops;
    for (const auto& q : g[i].qubits) ops.push_back(q.logical_id);
    if (c.gates[i].operands != ops) return "operands differ at " + std::to_string(i);
    if (c.gates[i].params.size() != g[i].params.size()) return "param count differs at " + std::to_string(i);
    for (std::size_t k = 0; k < g[i].params.size(); ++k) {
      if (std::abs(c.gates[i].params[k] - g[i].params[k]) > kParamTol) {
        return "param differs at " + std::to_string(i);
      }
    }
  }
  return "";
}

extract::ExtractedCircuit extract_module(const std::string& text) {
  const auto kernels = extract::find_quantum_kernels(text);
  if (kernels.size() != 1) throw Error("expected exactly one kernel");
  return extract::extract_circuit(kernels[0].text, extract::parse_result_layout(text),
                                  kernels[0].first_line);
}

Outcome round_trip_fidelity() {
  Outcome o;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& p = corpus()[i];
    const auto why = compare_round_trip(p, extract_module(qir::emit_qir(p, "k").text));
    if (!why.empty()) o.fail("circuit " + std::to_string(i) + ": " + why);
  }
  const auto ghz = qasm::compile_qasm(testing::read_file(testing::benchmark_dir() + "/ghz3.qasm"));
  const auto golden = testing::read_file(std::string(QCC_TEST_DATA_DIR) + "/golden/ghz3.qir.ll");
  if (qir::emit_qir(ghz, "ghz3").text != golden) o.fail("GHZ-3 emission differs from golden file");
  const auto why = compare_round_trip(ghz, extract_module(golden));
  if (!why.empty()) o.fail("GHZ-3 golden: " + why);
  if (o.pass) o.detail = std::to_string(corpus().size()) + " corpus circuits and GHZ-3 golden reproduced";
  return o;
}

Outcome sabre_sanity() {
  Outcome o;
  const auto line3 = route::linear_graph(3);
  const auto one = route::sabre_swap(ir::build_dag(ir::ProgramBuilder(3).gate("cx", {0, 2}).build()),
                                     route::Layout::identity(3, 3), line3);
  if (one.swap_count != 1) o.fail("cx(0,2) on linear-3 inserted " + std::to_string(one.swap_count) + " swaps");

  const auto ghz = qasm::compile_qasm(testing::read_file(testing::benchmark_dir() + "/ghz3.qasm"));
  const auto ghz_dag = ir::build_dag(ghz);
  const auto layout = route::sabre_layout(ghz_dag, line3);
  const int ghz_swaps = route::sabre_swap(ghz_dag, layout, line3).swap_count;
  if (ghz_swaps != 0) o.fail("GHZ-3 with SabreLayout inserted " + std::to_string(ghz_swaps) + " swaps");

  const auto p = opt::optimize(
      qasm::compile_qasm(testing::read_file(testing::benchmark_dir() + "/random_c.qasm")), 0);
  const auto module = qir::emit_qir(p, "k").text;
  route::RouteOptions options;
  options.seed = 1234;
  const auto first = route::route_qir(module, t_shape(), options);
  for (int rep = 1; rep < 10; ++rep) {
    if (route::route_qir(module, t_shape(), options) != first) {
      o.fail("repetition " + std::to_string(rep) + " produced different bytes");
    }
  }
  if (o.pass) o.detail = "1 swap, 0 swaps, 10 identical seeded runs";
  return o;
}

Outcome optimization_monotonicity() {
  Outcome o;
  const auto expected = nlohmann::json::parse(
      testing::read_file(std::string(QCC_TEST_DATA_DIR) + "/expected_counts.json"));
  const auto names = testing::benchmark_names();
  if (names.size() < 8) o.fail("only " + std::to_string(names.size()) + " benchmarks");
  for (const auto& name : names) {
    if (!expected.contains(name)) {
      o.fail(name + ": no recorded expectation");
      continue;
    }
    const auto p = qasm::compile_qasm(testing::read_file(testing::benchmark_dir() + "/" + name + ".qasm"));
    const auto l0 = ir::gate_counts(opt::optimize(p, 0));
    const auto l3 = ir::gate_counts(opt::optimize(p, 3));
    if (l3.total_gates > l0.total_gates) o.fail(name + ": level 3 grew the gate count");
    for (const auto& [level, counts] : {std::pair{"level0", l0}, std::pair{"level3", l3}}) {
      const auto got = nlohmann::json::parse(ir::to_json(counts));
      if (got != expected[name][level]) {
        o.fail(name + " " + level + ": got " + got.dump() + ", recorded " + expected[name][level].dump());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(names.size()) + " benchmarks match recorded counts, none grew";
  return o;
}

Outcome driver_workflow() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "qcc_acceptance_driver";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "main.cpp") << "int main() { return 0; }\n";
  std::ofstream(dir / "kernel.cu") << "__global__ void k() {}\n";
  std::ofstream(dir / "circuit.qasm") << testing::read_file(testing::benchmark_dir() + "/ghz3.qasm");
  const std::vector<std::string> inputs = {(dir / "main.cpp").string(), (dir / "kernel.cu").string(),
                                           (dir / "circuit.qasm").string()};
  const std::string cc = std::string(QCC_MOCK_DIR) + "/mock_cc.sh";
  driver::ToolchainConfig mock;
  mock.cxx_cmd = cc + " -c {input} -o {output}";
  mock.cuda_cmd = cc + " -c {input} -o {output} -arch={arch}";
  mock.linker_cmd = cc + " {input} -o {output}";
  driver::PlanOptions plan_options;
  plan_options.output = (dir / "out" / "app").string();

  try {
    const auto report = driver::execute_plan(driver::classify_inputs(inputs, plan_options, mock), {});
    int ok = 0;
    for (const auto& s : report.steps) ok += s.status == driver::StepStatus::Succeeded ? 1 : 0;
    if (report.steps.size() != 4 || ok != 4) o.fail("expected 4 succeeded steps, got " + std::to_string(ok));
    if (!report.artifact || !fs::exists(*report.artifact)) o.fail("no final artifact");
    std::size_t executables = 0;
    for (const auto& e : fs::directory_iterator(dir / "out")) {
      executables += e.path().filename() == "app" ? 1 : 0;
    }
    if (executables != 1) o.fail("expected exactly one final artifact");
  } catch (const std::exception& e) {
    o.fail(std::string("mock build threw: ") + e.what());
  }

  fs::remove_all(dir / "out");
  driver::ToolchainConfig failing = mock;
  failing.cuda_cmd = std::string(QCC_MOCK_DIR) + "/mock_fail.sh {input} -o {output}";
  try {
    driver::execute_plan(driver::classify_inputs(inputs, plan_options, failing), {});
    o.fail("failing mock did not abort");
  } catch (const driver::ToolFailure& e) {
    const auto& steps = e.report().steps;
    if (steps.empty() || steps.back().status != driver::StepStatus::Skipped) o.fail("link was not skipped");
    if (fs::exists(dir / "out" / "app")) o.fail("link ran after a failure");
  }

  int spawned = 0;
  driver::ExecuteOptions dry;
  dry.dry_run = true;
  std::ostringstream echo;
  dry.echo = &echo;
  dry.runner = [&](const std::vector<std::string>&) {
    ++spawned;
    return driver::ProcessResult{};
  };
  const auto report = driver::execute_plan(driver::classify_inputs(inputs, plan_options, mock), dry);
  if (spawned != 0 || report.processes_spawned != 0) o.fail("dry run spawned processes");
  fs::remove_all(dir);
  if (o.pass) o.detail = "4-step build with one artifact, failure stops before link, dry run spawns 0";
  return o;
}

Outcome metrics_correctness() {
  Outcome o;
  std::vector<std::pair<std::string, ir::QuantumProgram>> programs;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    programs.emplace_back("circuit " + std::to_string(i), corpus()[i]);
  }
  for (const auto& name : testing::benchmark_names()) {
    programs.emplace_back(
        name, qasm::compile_qasm(testing::read_file(testing::benchmark_dir() + "/" + name + ".qasm")));
  }
  for (const auto& [name, p] : programs) {
    const auto counts = ir::gate_counts(p);
    const auto oracle = testing::brute_force_counts(p);
    if (!(counts == oracle)) o.fail(name + ": gate_counts disagrees with brute force");
    if (ir::circuit_depth(ir::build_dag(p)) != oracle.depth) o.fail(name + ": circuit_depth disagrees");
  }
  if (o.pass) o.detail = std::to_string(programs.size()) + " programs agree with brute force";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"semantic preservation", semantic_preservation},
      {"routing validity", routing_validity},
      {"euler reconstruction", euler_reconstruction},
      {"round-trip fidelity", round_trip_fidelity},
      {"sabre sanity", sabre_sanity},
      {"optimization monotonicity", optimization_monotonicity},
      {"driver workflow", driver_workflow},
      {"metrics correctness", metrics_correctness},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome.fail(std::string("threw: ") + e.what());
    }
    failures += outcome.pass ? 0 : 1;
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": " << outcome.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}

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
#include <gtest/gtest.h>

#include <random>
#include <regex>

#include <nlohmann/json.hpp>

#include "qcc/error.hpp"
#include "qcc/extract/extractor.hpp"
#include "qcc/ir/dag.hpp"
#include "qcc/qasm/lower.hpp"
#include "qcc/qir/emit.hpp"
#include "qcc/sim/statevector.hpp"
#include "test_support.hpp"

namespace qcc::extract {
namespace {

using ir::ProgramBuilder;

ExtractedCircuit extract_module(const std::string& text) {
  const auto kernels = find_quantum_kernels(text);
  if (kernels.size() != 1) throw std::runtime_error("expected one kernel");
  return extract_circuit(kernels[0].text, parse_result_layout(text), kernels[0].first_line);
}

std::vector<ir::Inst> insts(const ir::QuantumProgram& p) {
  std::vector<ir::Inst> out;
  for (const auto& op : ir::program_body(p)) {
    if (const auto* g = std::get_if<ir::Inst>(&op)) out.push_back(*g);
  }
  return out;
}

constexpr const char* kHeader = R"(%Array = type opaque
%Qubit = type opaque
%Result = type opaque
declare %Array* @__quantum__rt__qubit_allocate_array(i64)
declare %Qubit* @__quantum__rt__qubit_allocate()
declare i8* @__quantum__rt__array_get_element_ptr_1d(%Array*, i64)
declare void @__quantum__qis__h__body(%Qubit*)
declare void @__quantum__qis__cnot__body(%Qubit*, %Qubit*)
declare void @__quantum__qis__rz__body(double, %Qubit*)
declare %Result* @__quantum__qis__mz__body(%Qubit*)
)";

TEST(extract_circuit, ghz3_from_emitted_module) {
  const auto p = qasm::compile_qasm(testing::read_file(testing::benchmark_dir() + "/ghz3.qasm"));
  const auto m = qir::emit_qir(p, "ghz3");
  const auto c = extract_module(m.text);
  ASSERT_EQ(c.gates.size(), 6U);
  EXPECT_EQ(c.num_qubits, 3);
  EXPECT_EQ(c.gates[0].name, "h");
  EXPECT_EQ(c.gates[0].kind, ir::NodeKind::SingleQubit);
  EXPECT_EQ(c.gates[1].name, "cx");
  EXPECT_EQ(c.gates[1].operands, (std::vector<int>{0, 1}));
  EXPECT_EQ(c.gates[2].operands, (std::vector<int>{1, 2}));
  for (int k = 0; k < 3; ++k) {
    const auto& g = c.gates[static_cast<std::size_t>(3 + k)];
    EXPECT_EQ(g.kind, ir::NodeKind::Measure);
    ASSERT_TRUE(g.result.has_value());
    EXPECT_EQ(g.result->index, k);
  }
  // origin lines point at the module's call lines
  EXPECT_NE(m.text.find("@__quantum__qis__h(%Qubit*"), std::string::npos);
  int line = 1;
  for (std::size_t i = 0; i < m.text.size(); ++i) {
    if (m.text.compare(i, 31, "  call void @__quantum__qis__h(") == 0) break;
    if (m.text[i] == '\n') ++line;
  }
  EXPECT_EQ(c.gates[0].origin_line, line);
}

TEST(extract_circuit, round_trip_of_random_programs) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto p = testing::random_circuit(rng, n, 1 + static_cast<int>(rng() % 40));
    const auto c = extract_module(qir::emit_qir(p, "k").text);
    const auto g = insts(p);
    ASSERT_EQ(c.gates.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_EQ(c.gates[i].name, g[i].gate);
      ASSERT_EQ(c.gates[i].params.size(), g[i].params.size());
      for (std::size_t k = 0; k < g[i].params.size(); ++k) {
        EXPECT_NEAR(c.gates[i].params[k], g[i].params[k], 1e-12);
      }
      std::vector<int> ops;
      for (const auto& q : g[i].qubits) ops.push_back(q.logical_id);
      EXPECT_EQ(c.gates[i].operands, ops);
    }
  }
}

TEST(extract_circuit, dag_matches_source_dag) {
  const auto p = ProgramBuilder(3, 1)
                     .gate("h", {0})
                     .barrier({0, 1, 2})
                     .gate("ccx", {0, 1, 2})
                     .gate("rz", {2}, {0.25})
                     .measure(2, 0)
                     .build();
  const auto c = extract_module(qir::emit_qir(p, "k").text);
  const auto d = ir::build_dag(p);
  ASSERT_EQ(c.dag.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(c.dag.node(i).kind, d.node(i).kind) << i;
    EXPECT_EQ(c.dag.node(i).name, d.node(i).name) << i;
    EXPECT_EQ(c.dag.node(i).qubits, d.node(i).qubits) << i;
    EXPECT_EQ(c.dag.node(i).params, d.node(i).params) << i;
  }
  EXPECT_EQ(c.dag.edges(), d.edges());
  ASSERT_EQ(c.barriers.size(), 1U);
  EXPECT_EQ(c.barriers[0].first, 1U);
  EXPECT_EQ(c.gates[1].kind, ir::NodeKind::MultiQubit);
}

TEST(extract_circuit, rebuilt_program_has_same_state) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = testing::random_circuit(rng, 4, 25);
    const auto q = to_program(extract_module(qir::emit_qir(p, "k").text));
    EXPECT_TRUE(sim::equiv_up_to_global_phase(sim::simulate(p), sim::simulate(q), 1e-10));
  }
}

TEST(extract_circuit, ssa_renaming_is_invisible) {
  const auto p = qasm::compile_qasm(testing::read_file(testing::benchmark_dir() + "/qft4.qasm"));
  const auto text = qir::emit_qir(p, "k").text;
  const auto renamed = std::regex_replace(text, std::regex(R"(%(\d+))"), "%v$1x");
  ASSERT_NE(renamed, text);
  const auto a = extract_module(text);
  const auto b = extract_module(renamed);
  EXPECT_EQ(gates_to_json(a.gates), gates_to_json(b.gates));
}

TEST(extract_circuit, hand_written_two_allocations) {
  const std::string text = std::string(kHeader) + R"(
define void @main() {
entry:
  %a = call %Array* @__quantum__rt__qubit_allocate_array(i64 2)
  %b = call %Array* @__quantum__rt__qubit_allocate_array(i64 1)
  %p0 = call i8* @__quantum__rt__array_get_element_ptr_1d(%Array* %b, i64 0)
  %q0 = bitcast i8* %p0 to %Qubit**
  %x = load %Qubit*, %Qubit** %q0
  %p1 = call i8* @__quantum__rt__array_get_element_ptr_1d(%Array* %a, i64 1)
  %q1 = bitcast i8* %p1 to %Qubit**
  %y = load %Qubit*, %Qubit** %q1
  %z = call %Qubit* @__quantum__rt__qubit_allocate()
  call void @__quantum__qis__h__body(%Qubit* %x)
  call void @__quantum__qis__cnot__body(%Qubit* %x, %Qubit* %y)
  call void @__quantum__qis__rz__body(double 0x3FE0000000000000, %Qubit* %z)
  %r = call %Result* @__quantum__qis__mz__body(%Qubit* %z)
  ret void
}
)";
  const auto c = extract_module(text);
  EXPECT_EQ(c.num_qubits, 4);
  EXPECT_EQ(c.registers, (std::vector<int>{2, 1, 1}));
  ASSERT_EQ(c.gates.size(), 4U);
  EXPECT_EQ(c.gates[0].name, "h");
  EXPECT_EQ(c.gates[0].operands, (std::vector<int>{2}));
  EXPECT_EQ(c.gates[1].name, "cx");
  EXPECT_EQ(c.gates[1].operands, (std::vector<int>{2, 1}));
  EXPECT_EQ(c.gates[2].name, "rz");
  EXPECT_EQ(c.gates[2].params, (std::vector<double>{0.5}));
  EXPECT_EQ(c.gates[2].operands, (std::vector<int>{3}));
  EXPECT_EQ(c.gates[3].name, "measure");
}

TEST(extract_circuit, untraceable_operand_throws) {
  const std::string text = std::string(kHeader) + R"(
define void @main(%Qubit* %arg) {
entry:
  call void @__quantum__qis__h__body(%Qubit* %arg)
  ret void
}
)";
  const auto kernels = find_quantum_kernels(text);
  ASSERT_EQ(kernels.size(), 1U);
  EXPECT_THROW(extract_circuit(kernels[0].text), ExtractionError);
}

TEST(extract_circuit, control_flow_is_rejected) {
  const std::string text = std::string(kHeader) + R"(
define void @main() {
entry:
  %a = call %Array* @__quantum__rt__qubit_allocate_array(i64 1)
  %p = call i8* @__quantum__rt__array_get_element_ptr_1d(%Array* %a, i64 0)
  %q = bitcast i8* %p to %Qubit*
  br label %next
next:
  call void @__quantum__qis__h__body(%Qubit* %q)
  ret void
}
)";
  EXPECT_THROW(extract_module(text), ExtractionError);
}

TEST(extract_circuit, conditional_module_is_rejected) {
  const auto p = ProgramBuilder(1, 1).measure(0, 0).conditional(1, "x", {0}).build();
  EXPECT_THROW(extract_module(qir::emit_qir(p, "k").text), ExtractionError);
}

TEST(extract_circuit, unknown_intrinsic_is_rejected) {
  const std::string text = std::string(kHeader) + R"(declare void @__quantum__qis__frobnicate(%Qubit*)
define void @main() {
entry:
  %q = call %Qubit* @__quantum__rt__qubit_allocate()
  call void @__quantum__qis__frobnicate(%Qubit* %q)
  ret void
}
)";
  EXPECT_THROW(extract_module(text), ExtractionError);
}

TEST(find_quantum_kernels, skips_classical_functions) {
  const std::string text = std::string(kHeader) + R"(
define i32 @helper(i32 %x) {
entry:
  ret i32 %x
}

define void @k1() {
entry:
  %q = call %Qubit* @__quantum__rt__qubit_allocate()
  call void @__quantum__qis__h__body(%Qubit* %q)
  ret void
}
)";
  const auto ks = find_quantum_kernels(text);
  ASSERT_EQ(ks.size(), 1U);
  EXPECT_EQ(ks[0].name, "k1");
  EXPECT_EQ(ks[0].first_line, 17);
}

TEST(gates_to_json, schema) {
  const auto p = ProgramBuilder(2).gate("rz", {1}, {0.5}).gate("cx", {1, 0}).build();
  const auto j = nlohmann::json::parse(gates_to_json(extract_module(qir::emit_qir(p, "k").text).gates));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[0]["name"], "rz");
  EXPECT_EQ(j[0]["params"][0], 0.5);
  EXPECT_EQ(j[0]["operands"], nlohmann::json::array({1}));
  EXPECT_EQ(j[1]["kind"], "two-qubit");
  EXPECT_TRUE(j[1].contains("line"));
}

}  // namespace
}  // namespace qcc::extract

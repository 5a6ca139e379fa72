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

#include <cmath>
#include <limits>
#include <random>
#include <regex>

#include "qcc/error.hpp"
#include "qcc/ir/gate_table.hpp"
#include "qcc/qasm/lower.hpp"
#include "qcc/qir/emit.hpp"
#include "qcc/qir/verify.hpp"
#include "test_support.hpp"

namespace qcc::qir {
namespace {

using ir::ProgramBuilder;

constexpr const char* kGhz3 = R"(; ModuleID = 'ghz3'
; qcc.kernel: ghz3
; qcc.cregs: c[3]
; qcc.results: c[0] c[1] c[2]
source_filename = "ghz3"

%Array = type opaque
%Qubit = type opaque
%Result = type opaque

declare %Array* @__quantum__rt__qubit_allocate_array(i64)
declare %Result* @__quantum__qis__m(%Qubit*)
declare i8* @__quantum__rt__array_get_element_ptr(%Array*, i64)
declare void @__quantum__qis__cx(%Qubit*, %Qubit*)
declare void @__quantum__qis__h(%Qubit*)
declare void @__quantum__rt__finalize()
declare void @__quantum__rt__initialize(i8*)
declare void @__quantum__rt__qubit_release_array(%Array*)

define void @ghz3() #0 {
entry:
  call void @__quantum__rt__initialize(i8* null)
  %0 = call %Array* @__quantum__rt__qubit_allocate_array(i64 3)
  %1 = call i8* @__quantum__rt__array_get_element_ptr(%Array* %0, i64 0)
  %2 = bitcast i8* %1 to %Qubit*
  %3 = call i8* @__quantum__rt__array_get_element_ptr(%Array* %0, i64 1)
  %4 = bitcast i8* %3 to %Qubit*
  %5 = call i8* @__quantum__rt__array_get_element_ptr(%Array* %0, i64 2)
  %6 = bitcast i8* %5 to %Qubit*
  call void @__quantum__qis__h(%Qubit* %2)
  call void @__quantum__qis__cx(%Qubit* %2, %Qubit* %4)
  call void @__quantum__qis__cx(%Qubit* %4, %Qubit* %6)
  %7 = call %Result* @__quantum__qis__m(%Qubit* %2)
  %8 = call %Result* @__quantum__qis__m(%Qubit* %4)
  %9 = call %Result* @__quantum__qis__m(%Qubit* %6)
  call void @__quantum__rt__qubit_release_array(%Array* %0)
  call void @__quantum__rt__finalize()
  ret void
}

attributes #0 = { "quantum" }
)";

ir::QuantumProgram ghz3() {
  return qasm::compile_qasm(R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[3];
creg c[3];
h q[0];
cx q[0],q[1];
cx q[1],q[2];
measure q -> c;
)");
}

std::string diagnostics(const std::vector<QirDiagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) out += std::to_string(d.line) + ": " + d.message + "\n";
  return out;
}

TEST(emit_qir, ghz3_golden_text) {
  const auto m = emit_qir(ghz3(), "ghz3");
  EXPECT_EQ(m.text, kGhz3);
  EXPECT_EQ(m.kernel_name, "ghz3");
  EXPECT_EQ(m.declared_externals.size(), 8U);
  EXPECT_TRUE(verify_qir_text(m).empty()) << diagnostics(verify_qir_text(m));
}

TEST(emit_qir, rotation_angle_comes_first) {
  const auto m = emit_qir(ProgramBuilder(1).gate("rz", {0}, {0.5}).build(), "k");
  const std::regex line(R"(call void @__quantum__qis__rz\(double 5\.000000e-01, %Qubit\* %\d+\))");
  EXPECT_TRUE(std::regex_search(m.text, line)) << m.text;
  EXPECT_NE(m.text.find("declare void @__quantum__qis__rz(double, %Qubit*)"), std::string::npos);
}

TEST(emit_qir, non_round_trip_doubles_use_hex) {
  const auto m = emit_qir(ProgramBuilder(1).gate("rx", {0}, {0.123456789}).build(), "k");
  std::smatch hit;
  ASSERT_TRUE(std::regex_search(m.text, hit, std::regex(R"(double (0x[0-9A-F]{16}))"))) << m.text;
  EXPECT_EQ(parse_double(hit[1].str()), 0.123456789);
  EXPECT_EQ(format_double(0.1), "1.000000e-01");
}

TEST(emit_qir, empty_program_is_well_formed) {
  const auto m = emit_qir(ProgramBuilder(0).build(), "empty");
  EXPECT_NE(m.text.find("define void @empty() #0 {"), std::string::npos);
  EXPECT_EQ(m.text.find("__quantum__qis__"), std::string::npos);
  EXPECT_TRUE(verify_qir_text(m).empty()) << diagnostics(verify_qir_text(m));
}

TEST(emit_qir, deterministic_output) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto p = testing::random_circuit(rng, 4, 30);
    const auto a = emit_qir(p, "k");
    const auto b = emit_qir(p, "k");
    EXPECT_EQ(a.text, b.text);
    EXPECT_TRUE(verify_qir_text(a).empty()) << diagnostics(verify_qir_text(a));
  }
}

TEST(emit_qir, conditional_lowers_to_branch) {
  const auto p = ProgramBuilder(2, 2).measure(0, 0).measure(1, 1).conditional(2, "x", {0}).build();
  const auto m = emit_qir(p, "cond");
  EXPECT_NE(m.text.find("@__quantum__rt__result_equal"), std::string::npos);
  EXPECT_NE(m.text.find("br i1"), std::string::npos);
  EXPECT_TRUE(verify_qir_text(m).empty()) << diagnostics(verify_qir_text(m)) << m.text;
}

TEST(emit_qir, barrier_is_a_comment) {
  const auto m = emit_qir(ProgramBuilder(2).gate("h", {0}).barrier({0, 1}).gate("h", {1}).build(), "b");
  EXPECT_TRUE(std::regex_search(m.text, std::regex(R"(\n  ; barrier %\d+ %\d+\n)"))) << m.text;
  EXPECT_TRUE(verify_qir_text(m).empty());
}

TEST(emit_qir, every_qelib_primitive_maps) {
  for (const auto& info : ir::primitive_gates()) {
    const std::string name(info.name);
    if (name == "measure" || name == "reset" || name == "fused_unitary") continue;
    std::vector<int> qubits;
    for (int q = 0; q < info.num_qubits; ++q) qubits.push_back(q);
    const std::vector<double> params(static_cast<std::size_t>(info.num_params), 0.25);
    const auto m = emit_qir(ProgramBuilder(3).gate(name, qubits, params).build(), "g");
    EXPECT_NE(m.text.find("@__quantum__qis__" + name), std::string::npos) << name;
    EXPECT_TRUE(verify_qir_text(m).empty()) << name << "\n" << diagnostics(verify_qir_text(m));
  }
}

TEST(emit_qir, fused_unitary_is_rejected) {
  ir::Inst g;
  g.gate = "fused_unitary";
  g.qubits = {{0, 0, 0}};
  g.matrix = ir::Unitary2::identity();
  EXPECT_THROW(emit_qir(ProgramBuilder(1).inst(g).build(), "k"), EmitError);
}

TEST(format_double, round_trips) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int k = 0; k < 1000; ++k) {
    const double v = dist(rng);
    EXPECT_EQ(parse_double(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "5.000000e-01");
  EXPECT_EQ(format_double(0.0), "0.000000e+00");
  EXPECT_EQ(parse_double("0x3FE0000000000000"), 0.5);
  EXPECT_THROW(parse_double("abc"), ParseError);
}

TEST(verify_qir_text, reports_use_before_definition) {
  const std::string text = R"(declare void @__quantum__qis__h(%Qubit*)
define void @k() {
entry:
  call void @__quantum__qis__h(%Qubit* %3)
  ret void
}
)";
  const auto ds = verify_qir_text(text);
  ASSERT_FALSE(ds.empty());
  EXPECT_EQ(ds[0].line, 4);
}

TEST(verify_qir_text, reports_undeclared_callee) {
  const std::string text = R"(%Qubit = type opaque
define void @k() {
entry:
  call void @__quantum__qis__h(%Qubit* null)
  ret void
}
)";
  const auto ds = verify_qir_text(text);
  ASSERT_EQ(ds.size(), 1U) << diagnostics(ds);
  EXPECT_NE(ds[0].message.find("__quantum__qis__h"), std::string::npos);
}

TEST(verify_qir_text, reports_duplicate_and_unbalanced) {
  const std::string text = R"(declare i8* @f()
define void @k() {
entry:
  %0 = call i8* @f()
  %0 = call i8* @f(
  ret void
)";
  const auto ds = verify_qir_text(text);
  EXPECT_GE(ds.size(), 3U) << diagnostics(ds);
}

TEST(verify_qir_text, every_mutated_golden_line_is_caught) {
  // dropping the defining line of any SSA value must surface a diagnostic
  const std::string golden = kGhz3;
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < golden.size()) {
    const auto end = golden.find('\n', start);
    lines.push_back(golden.substr(start, end - start));
    start = end + 1;
  }
  for (std::size_t skip = 0; skip < lines.size(); ++skip) {
    if (lines[skip].find("  %") != 0) continue;
    std::string text;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i != skip) text += lines[i] + "\n";
    }
    if (lines[skip].find("qis__m") != std::string::npos) continue;  // results are unused
    EXPECT_FALSE(verify_qir_text(text).empty()) << "dropped: " << lines[skip];
  }
}

}  // namespace
}  // namespace qcc::qir

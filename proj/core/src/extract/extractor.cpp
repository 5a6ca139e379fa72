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
#include "qcc/extract/extractor.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include <nlohmann/json.hpp>

#include "qcc/ir/gate_table.hpp"
#include "qcc/qir/emit.hpp"
#include "qir/llvm_text.hpp"

namespace qcc::extract {

namespace {

using namespace qir::detail;

constexpr std::string_view kQisPrefix = "__quantum__qis__";

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string define_name(std::string_view line) {
  const auto at = line.find('@');
  if (at == std::string_view::npos) return {};
  std::size_t j = at + 1;
  while (j < line.size() && is_name_char(line[j])) ++j;
  return std::string(line.substr(at + 1, j - at - 1));
}

bool contains_qis_call(std::string_view line) {
  const auto call = parse_call(line);
  return call && call->callee.starts_with(kQisPrefix);
}

/// Strips the prefix and the optional `__body` suffix; maps common QIS
/// spellings onto qelib names.
std::string qis_gate_name(std::string_view callee) {
  std::string name(callee.substr(kQisPrefix.size()));
  if (name.ends_with("__body")) name.resize(name.size() - 6);
  if (name == "m" || name == "mz" || name == "measure") return std::string(ir::kMeasure);
  if (name == "cnot") return "cx";
  if (name == "s__adj") return "sdg";
  if (name == "t__adj") return "tdg";
  return name;
}

std::string value_name(std::string_view v) {
  v = trim(v);
  if (v.empty() || v.front() != '%') return {};
  return std::string(v.substr(1));
}

// `bitcast i8* %3 to %Qubit*` -> ("3", "%Qubit*")
std::optional<std::pair<std::string, std::string>> parse_cast(std::string_view rhs) {
  if (!starts_with_word(rhs, "bitcast")) return std::nullopt;
  rhs = trim(rhs.substr(7));
  const auto to = rhs.rfind(" to ");
  if (to == std::string_view::npos) return std::nullopt;
  const auto from = trim(rhs.substr(0, to));
  const auto space = from.rfind(' ');
  if (space == std::string_view::npos) return std::nullopt;
  return std::make_pair(value_name(from.substr(space + 1)),
                        std::string(trim(rhs.substr(to + 4))));
}

// `load %Qubit*, %Qubit** %4` -> "4"
std::optional<std::string> parse_qubit_load(std::string_view rhs) {
  if (!starts_with_word(rhs, "load")) return std::nullopt;
  const auto parts = split_top_level(trim(rhs.substr(4)), ',');
  if (parts.size() < 2 || parts[0] != "%Qubit*") return std::nullopt;
  const auto space = parts[1].rfind(' ');
  if (space == std::string_view::npos) return std::nullopt;
  return value_name(parts[1].substr(space + 1));
}

bool is_control_flow(std::string_view instr) {
  for (const char* word : {"br", "switch", "indirectbr", "invoke", "callbr", "phi", "select",
                           "resume", "unreachable"}) {
    if (starts_with_word(instr, word)) return true;
  }
  return false;
}

std::int64_t parse_int(std::string_view s, int line) {
  std::int64_t v = 0;
  s = trim(s);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ExtractionError("line " + std::to_string(line) + ": expected integer, got '" +
                          std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<KernelFunction> find_quantum_kernels(std::string_view module_text) {
  std::vector<KernelFunction> kernels;
  const auto lines = split_lines(module_text);
  std::optional<KernelFunction> current;
  bool has_qis = false;
  int depth = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto raw = lines[i];
    const auto line = trim(strip_comment(raw));
    const int lineno = static_cast<int>(i + 1);
    if (starts_with_word(line, "define")) {
      if (current) {
        throw ParseError("line " + std::to_string(lineno) + ": nested function definition");
      }
      if (line.find('@') == std::string_view::npos || line.find('(') == std::string_view::npos) {
        throw ParseError("line " + std::to_string(lineno) + ": malformed define");
      }
      current = KernelFunction{define_name(line), {}, lineno};
      has_qis = false;
      depth = 0;
    }
    if (!current) {
      if (line.find('{') != std::string_view::npos && !line.starts_with("attributes")) {
        throw ParseError("line " + std::to_string(lineno) + ": '{' outside of a function");
      }
      if (line == "}") {
        throw ParseError("line " + std::to_string(lineno) + ": unmatched '}'");
      }
      continue;
    }
    current->text.append(raw).push_back('\n');
    if (contains_qis_call(line)) has_qis = true;
    for (const char c : line) {
      if (c == '{') ++depth;
      if (c == '}') --depth;
    }
    if (depth == 0 && line.find('}') != std::string_view::npos) {
      if (has_qis) kernels.push_back(std::move(*current));
      current.reset();
    } else if (depth < 0) {
      throw ParseError("line " + std::to_string(lineno) + ": unbalanced braces");
    }
  }
  if (current) throw ParseError("unterminated function '" + current->name + "'");
  return kernels;
}

ResultLayout parse_result_layout(std::string_view module_text) {
  ResultLayout layout;
  std::map<std::string, int> creg_ids;
  for (const auto raw : split_lines(module_text)) {
    const auto line = trim(raw);
    if (line.starts_with("; qcc.cregs:")) {
      for (auto item : split_top_level(trim(line.substr(12)), ' ')) {
        const auto open = item.find('[');
        if (item.empty() || open == std::string_view::npos || item.back() != ']') {
          throw ParseError("malformed creg entry '" + std::string(item) + "'");
        }
        const std::string name(item.substr(0, open));
        const auto size = parse_int(item.substr(open + 1, item.size() - open - 2), 0);
        creg_ids[name] = static_cast<int>(layout.cregs.size());
        layout.cregs.emplace_back(name, static_cast<int>(size));
      }
    } else if (line.starts_with("; qcc.results:")) {
      for (auto item : split_top_level(trim(line.substr(14)), ' ')) {
        const auto open = item.find('[');
        if (item.empty() || open == std::string_view::npos || item.back() != ']') {
          throw ParseError("malformed result entry '" + std::string(item) + "'");
        }
        const auto it = creg_ids.find(std::string(item.substr(0, open)));
        if (it == creg_ids.end()) {
          throw ParseError("result refers to unknown creg '" + std::string(item) + "'");
        }
        const auto index = parse_int(item.substr(open + 1, item.size() - open - 2), 0);
        layout.results.push_back({it->second, static_cast<int>(index)});
      }
    }
  }
  return layout;
}

ExtractedCircuit extract_circuit(std::string_view kernel_text, const ResultLayout& layout,
                                 int first_line) {
  ExtractedCircuit out;
  // element pointers and Qubit** casts, not yet usable as operands
  std::map<std::string, int> pointers;
  std::size_t measure_count = 0;
  std::vector<std::pair<std::size_t, std::vector<int>>> barriers;

  auto bind = [&](const std::string& name, int logical, int line) {
    if (!out.values.bindings.emplace(name, logical).second) {
      throw ExtractionError("line " + std::to_string(line) + ": %" + name + " bound twice");
    }
  };
  auto lookup_qubit = [&](const std::string& name, int line) {
    const auto it = out.values.bindings.find(name);
    if (it == out.values.bindings.end()) {
      throw ExtractionError("line " + std::to_string(line) + ": qubit operand %" + name +
                            " is not traceable to an allocation");
    }
    return it->second;
  };

  const auto lines = split_lines(kernel_text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = first_line + static_cast<int>(i);
    const auto raw = trim(lines[i]);
    if (raw.starts_with("; barrier")) {
      std::vector<int> qubits;
      for (const auto& n : percent_names(raw)) qubits.push_back(lookup_qubit(n, lineno));
      out.barriers.emplace_back(out.gates.size(), std::move(qubits));
      continue;
    }
    const auto instr = trim(strip_comment(raw));
    if (instr.empty() || starts_with_word(instr, "define") || instr == "}" ||
        starts_with_word(instr, "ret")) {
      continue;
    }
    if (instr.back() == ':' && instr.find(' ') == std::string_view::npos) continue;
    if (is_control_flow(instr)) {
      const auto end = instr.find(' ');
      throw ExtractionError("line " + std::to_string(lineno) +
                            ": control flow is not supported in quantum kernels ('" +
                            std::string(instr.substr(0, end)) + "')");
    }

    const auto assigned = assigned_name(instr);
    const auto rhs = assigned ? trim(instr.substr(instr.find('=') + 1)) : instr;

    if (const auto cast = parse_cast(rhs)) {
      const auto it = pointers.find(cast->first);
      if (!assigned || it == pointers.end()) continue;
      if (cast->second == "%Qubit*") {
        bind(*assigned, it->second, lineno);
      } else if (cast->second == "%Qubit**") {
        pointers[*assigned] = it->second;
      }
      continue;
    }
    if (const auto src = parse_qubit_load(rhs)) {
      const auto it = pointers.find(*src);
      if (assigned && it != pointers.end()) bind(*assigned, it->second, lineno);
      continue;
    }

    std::string error;
    const auto call = parse_call(instr, &error);
    if (!call) {
      if (!error.empty()) throw ExtractionError("line " + std::to_string(lineno) + ": " + error);
      continue;
    }
    const auto& callee = call->callee;
    if (callee == "__quantum__rt__qubit_allocate_array") {
      if (!assigned || call->args.size() != 1) {
        throw ExtractionError("line " + std::to_string(lineno) + ": malformed allocation");
      }
      const int size = static_cast<int>(parse_int(call->args[0].value, lineno));
      out.values.array_bindings[*assigned] = {out.num_qubits, size};
      out.registers.push_back(size);
      out.num_qubits += size;
    } else if (callee == "__quantum__rt__qubit_allocate") {
      if (!assigned) continue;
      out.registers.push_back(1);
      bind(*assigned, out.num_qubits++, lineno);
    } else if (callee == "__quantum__rt__array_get_element_ptr" ||
               callee == "__quantum__rt__array_get_element_ptr_1d") {
      if (!assigned || call->args.size() != 2) {
        throw ExtractionError("line " + std::to_string(lineno) + ": malformed element access");
      }
      const auto array = out.values.array_bindings.find(value_name(call->args[0].value));
      if (array == out.values.array_bindings.end()) {
        // arrays that are not qubit allocations are not our concern
        continue;
      }
      const auto index = parse_int(call->args[1].value, lineno);
      if (index < 0 || index >= array->second.second) {
        throw ExtractionError("line " + std::to_string(lineno) + ": index " +
                              std::to_string(index) + " out of range");
      }
      pointers[*assigned] = array->second.first + static_cast<int>(index);
    } else if (callee.starts_with(kQisPrefix)) {
      ExtractedGate gate;
      gate.name = qis_gate_name(callee);
      gate.origin_line = lineno;
      for (const auto& arg : call->args) {
        if (arg.type == "double") {
          gate.params.push_back(qir::parse_double(arg.value));
        } else if (arg.type == "%Qubit*") {
          gate.operands.push_back(lookup_qubit(value_name(arg.value), lineno));
        }
      }
      const int arity = ir::gate_arity(gate.name);
      if (arity < 0 || gate.name == ir::kFusedUnitary) {
        throw ExtractionError("line " + std::to_string(lineno) + ": unknown intrinsic @" +
                              callee);
      }
      const auto* info = ir::find_primitive(gate.name);
      const std::size_t n_params = info ? static_cast<std::size_t>(info->num_params) : 0;
      if (static_cast<int>(gate.operands.size()) != arity || gate.params.size() != n_params) {
        throw ExtractionError("line " + std::to_string(lineno) + ": @" + callee +
                              " called with the wrong operands");
      }
      std::set<int> distinct(gate.operands.begin(), gate.operands.end());
      if (distinct.size() != gate.operands.size()) {
        throw ExtractionError("line " + std::to_string(lineno) + ": repeated qubit operand");
      }
      if (gate.name == ir::kMeasure) {
        gate.kind = ir::NodeKind::Measure;
        if (measure_count < layout.results.size()) gate.result = layout.results[measure_count];
        ++measure_count;
      } else {
        gate.kind = arity == 1   ? ir::NodeKind::SingleQubit
                    : arity == 2 ? ir::NodeKind::TwoQubit
                                 : ir::NodeKind::MultiQubit;
      }
      out.gates.push_back(std::move(gate));
    }
  }

  std::vector<int> creg_sizes;
  for (const auto& [name, size] : layout.cregs) creg_sizes.push_back(size);
  ir::DagBuilder builder(out.num_qubits, creg_sizes);
  std::size_t next_barrier = 0;
  auto flush_barriers = [&](std::size_t position) {
    while (next_barrier < out.barriers.size() && out.barriers[next_barrier].first == position) {
      ir::DagNode node;
      node.kind = ir::NodeKind::Barrier;
      node.name = "barrier";
      node.qubits = out.barriers[next_barrier].second;
      node.origin = position;
      builder.add(std::move(node));
      ++next_barrier;
    }
  };
  for (std::size_t g = 0; g < out.gates.size(); ++g) {
    flush_barriers(g);
    const auto& gate = out.gates[g];
    ir::DagNode node;
    node.kind = gate.kind;
    node.name = gate.name;
    node.params = gate.params;
    node.qubits = gate.operands;
    node.origin = g;
    builder.add(std::move(node), gate.result);
  }
  flush_barriers(out.gates.size());
  out.dag = std::move(builder).finish();
  return out;
}

ir::QuantumProgram to_program(const ExtractedCircuit& circuit, const ResultLayout& layout) {
  const int n = circuit.num_qubits;
  std::vector<ir::QRegister> regs;
  if (n > 0) regs.push_back({0, "q", n, 0});
  std::vector<ir::CRegister> cregs;
  for (const auto& [name, size] : layout.cregs) {
    cregs.push_back({static_cast<int>(cregs.size()), name, size});
  }
  int unmapped = 0;
  for (const auto& g : circuit.gates) {
    if (g.kind == ir::NodeKind::Measure && !g.result) ++unmapped;
  }
  if (unmapped > 0 && cregs.empty()) {
    cregs.push_back({0, "c", unmapped});
  } else if (unmapped > 0) {
    throw ExtractionError("module header records fewer results than measurements");
  }
  auto ref = [](int q) { return ir::QubitRef{0, q, q}; };

  std::vector<ir::IrOp> body;
  std::size_t next_barrier = 0;
  int next_bit = 0;
  auto flush_barriers = [&](std::size_t position) {
    while (next_barrier < circuit.barriers.size() &&
           circuit.barriers[next_barrier].first == position) {
      ir::Barrier b;
      for (int q : circuit.barriers[next_barrier].second) b.qubits.push_back(ref(q));
      body.emplace_back(std::move(b));
      ++next_barrier;
    }
  };
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    flush_barriers(g);
    const auto& gate = circuit.gates[g];
    ir::Inst inst;
    inst.gate = gate.name;
    inst.params = gate.params;
    for (int q : gate.operands) inst.qubits.push_back(ref(q));
    inst.span.line = gate.origin_line;
    if (gate.kind == ir::NodeKind::Measure) {
      inst.result = gate.result ? *gate.result : ir::ResultRef{0, next_bit++};
    }
    body.emplace_back(std::move(inst));
  }
  flush_barriers(circuit.gates.size());
  return ir::finalize_program(std::move(regs), std::move(cregs), std::move(body));
}

std::string gates_to_json(const std::vector<ExtractedGate>& gates) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& g : gates) {
    nlohmann::ordered_json j;
    j["kind"] = ir::to_string(g.kind);
    j["name"] = g.name;
    j["params"] = g.params;
    j["operands"] = g.operands;
    j["line"] = g.origin_line;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace qcc::extract

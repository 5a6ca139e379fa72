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
#include "qcc/driver/quantum_compile.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

#include "qcc/opt/passes.hpp"
#include "qcc/qasm/lower.hpp"
#include "qcc/qir/emit.hpp"

namespace qcc::driver {

std::string c_identifier(std::string_view stem) {
  std::string out;
  for (const char c : stem) {
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out.front()))) out.insert(0, "_");
  return out;
}

namespace {

constexpr const char* kDefaultRunner = "qcc simulate --ignore-measurements {input}";

nlohmann::ordered_json counts_json(const ir::GateCounts& c) {
  return nlohmann::ordered_json::parse(ir::to_json(c));
}

}  // namespace

QuantumArtifacts compile_quantum(std::string_view source, std::string_view stem,
                                 const QuantumOptions& options) {
  QuantumArtifacts out;
  out.kernel_name = c_identifier(stem);
  ir::QuantumProgram program = opt::optimize(qasm::compile_qasm(source), options.opt_level,
                                             options.native);
  if (options.coupling) {
    route::RouteOptions ro;
    ro.seed = options.seed;
    ro.sabre_iterations = options.sabre_iterations;
    if (options.layout == LayoutMode::Identity) {
      ro.layout = route::Layout::identity(program.num_qubits(), options.coupling->n_physical());
    }
    auto routed = route::route_program(program, *options.coupling, ro);
    const ir::GateCounts before = ir::gate_counts(routed.program);
    program = std::move(routed.program);
    if (!options.native.contains("swap")) {
      program = opt::decompose_unsupported(program, options.native);
    }
    nlohmann::ordered_json j;
    j["swap_count"] = routed.routing.swap_count;
    j["initial_layout"] = routed.routing.initial_layout.log_to_phys();
    j["final_layout"] = routed.routing.final_layout.log_to_phys();
    j["before_swap_decomposition"] = counts_json(before);
    j["after_swap_decomposition"] = counts_json(ir::gate_counts(program));
    out.routing_json = j.dump(2) + "\n";
  }
  out.metrics = ir::gate_counts(program);
  out.qir = qir::emit_qir(program, out.kernel_name).text;
  out.wrapper_source =
      generate_wrapper(out.qir, stem,
                       options.runner_cmd.empty() ? kDefaultRunner : options.runner_cmd,
                       options.standalone);
  return out;
}

std::string generate_wrapper(std::string_view qir, std::string_view stem,
                             std::string_view runner_cmd, bool standalone) {
  const std::string id = c_identifier(stem);
  const std::string runner = nlohmann::json(std::string(runner_cmd)).dump();
  std::string src;
  src += "// Generated by qcc from " + std::string(stem) + ".qasm. Do not edit.\n";
  src += "#include <cstdio>\n#include <cstdlib>\n#include <string>\n\n";
  src += "#include <unistd.h>\n\n";
  src += "namespace {\n\n";
  src += "const char kQir[] = R\"qcc_qir(" + std::string(qir) + ")qcc_qir\";\n\n";
  src += "const char kRunner[] = " + runner + ";\n\n";
  src += "}  // namespace\n\n";
  src += "extern \"C\" int run_" + id + "() {\n";
  src += "  char path[] = \"/tmp/qcc_" + id + "_XXXXXX.ll\";\n";
  src += "  const int fd = mkstemps(path, 3);\n";
  src += "  if (fd < 0) return -1;\n";
  src += "  std::FILE* f = fdopen(fd, \"w\");\n";
  src += "  if (f == nullptr) return -1;\n";
  src += "  std::fputs(kQir, f);\n";
  src += "  std::fclose(f);\n";
  src += "  std::string cmd = kRunner;\n";
  src += "  const std::string quoted = std::string(\"'\") + path + \"'\";\n";
  src += "  for (auto pos = cmd.find(\"{input}\"); pos != std::string::npos;\n";
  src += "       pos = cmd.find(\"{input}\", pos + quoted.size())) {\n";
  src += "    cmd.replace(pos, 7, quoted);\n";
  src += "  }\n";
  src += "  const int status = std::system(cmd.c_str());\n";
  src += "  std::remove(path);\n";
  src += "  return status;\n";
  src += "}\n";
  if (standalone) {
    src += "\nint main() { return run_" + id + "() == 0 ? 0 : 1; }\n";
  }
  return src;
}

}  // namespace qcc::driver

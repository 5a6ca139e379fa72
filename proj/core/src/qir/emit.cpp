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
#include "qcc/qir/emit.hpp"

#include <bit>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "qcc/ir/gate_table.hpp"

namespace qcc::qir {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", value);
  if (std::strtod(buf, nullptr) == value) return buf;
  std::snprintf(buf, sizeof buf, "0x%016" PRIX64, std::bit_cast<std::uint64_t>(value));
  return buf;
}

double parse_double(std::string_view text) {
  const std::string s(text);
  if (s.size() == 18 && (s.starts_with("0x") || s.starts_with("0X"))) {
    return std::bit_cast<double>(std::strtoull(s.c_str() + 2, nullptr, 16));
  }
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw ParseError("malformed floating-point literal '" + s + "'");
  }
  return v;
}

namespace {

using ir::Inst;

constexpr std::string_view kInitialize = "declare void @__quantum__rt__initialize(i8*)";
constexpr std::string_view kFinalize = "declare void @__quantum__rt__finalize()";
constexpr std::string_view kAllocate =
    "declare %Array* @__quantum__rt__qubit_allocate_array(i64)";
constexpr std::string_view kRelease =
    "declare void @__quantum__rt__qubit_release_array(%Array*)";
constexpr std::string_view kElementPtr =
    "declare i8* @__quantum__rt__array_get_element_ptr(%Array*, i64)";
constexpr std::string_view kMeasureDecl = "declare %Result* @__quantum__qis__m(%Qubit*)";
constexpr std::string_view kResultOne = "declare %Result* @__quantum__rt__result_get_one()";
constexpr std::string_view kResultEqual =
    "declare i1 @__quantum__rt__result_equal(%Result*, %Result*)";

class Emitter {
 public:
  Emitter(const ir::QuantumProgram& program, std::string_view kernel)
      : program_(program), kernel_(kernel) {
    for (const auto& r : program.registers) {
      used_.emplace(r.register_id, std::vector<bool>(static_cast<std::size_t>(r.size), false));
    }
    for (const auto& op : program.ops) {
      const Inst* inst = std::get_if<Inst>(&op);
      if (const auto* c = std::get_if<ir::ConditionalRegion>(&op)) inst = &c->body;
      if (const auto* b = std::get_if<ir::Barrier>(&op)) {
        for (const auto& q : b->qubits) {
          used_.at(q.register_id)[static_cast<std::size_t>(q.index)] = true;
        }
      }
      if (inst == nullptr) continue;
      for (const auto& q : inst->qubits) {
        used_.at(q.register_id)[static_cast<std::size_t>(q.index)] = true;
      }
    }
  }

  QirModule run() {
    if (!program_.is_finalized()) {
      throw EmitError("program must begin with QRTInit and end with QRTFinalize");
    }
    for (const auto& op : program_.ops) std::visit([&](const auto& o) { emit(o); }, op);

    std::ostringstream out;
    out << "; ModuleID = '" << kernel_ << "'\n";
    out << "; qcc.kernel: " << kernel_ << "\n";
    out << "; qcc.cregs:";
    for (const auto& c : program_.cregs) out << " " << c.name << "[" << c.size << "]";
    out << "\n; qcc.results:";
    for (const auto& r : result_targets_) out << " " << r;
    out << "\nsource_filename = \"" << kernel_ << "\"\n\n";
    out << "%Array = type opaque\n%Qubit = type opaque\n%Result = type opaque\n\n";
    for (const auto& d : declared_) out << d << "\n";
    out << "\ndefine void @" << kernel_ << "() #0 {\nentry:\n" << body_.str() << "}\n\n";
    out << "attributes #0 = { \"quantum\" }\n";

    QirModule module;
    module.text = out.str();
    module.kernel_name = kernel_;
    module.declared_externals = declared_;
    return module;
  }

 private:
  std::string fresh() { return "%" + std::to_string(next_value_++); }

  void line(const std::string& s) { body_ << "  " << s << "\n"; }

  void emit(const ir::QrtInit&) {
    declared_.insert(std::string(kInitialize));
    line("call void @__quantum__rt__initialize(i8* null)");
  }

  void emit(const ir::QrtFinalize&) {
    declared_.insert(std::string(kFinalize));
    line("call void @__quantum__rt__finalize()");
    line("ret void");
  }

  void emit(const ir::Qalloc& a) {
    const auto& reg = program_.registers.at(static_cast<std::size_t>(a.register_id));
    declared_.insert(std::string(kAllocate));
    const std::string array = fresh();
    arrays_[a.register_id] = array;
    line(array + " = call %Array* @__quantum__rt__qubit_allocate_array(i64 " +
         std::to_string(reg.size) + ")");
    const auto& used = used_.at(a.register_id);
    for (int i = 0; i < reg.size; ++i) {
      if (used[static_cast<std::size_t>(i)]) extract(a.register_id, i);
    }
  }

  void emit(const ir::Dealloc& d) {
    declared_.insert(std::string(kRelease));
    line("call void @__quantum__rt__qubit_release_array(%Array* " +
         arrays_.at(d.register_id) + ")");
  }

  void emit(const ir::QubitExtract& e) {
    if (!qubits_.contains({e.register_id, e.index})) extract(e.register_id, e.index);
  }

  void emit(const ir::Barrier& b) {
    std::string s = "; barrier";
    for (const auto& q : b.qubits) s += " " + qubits_.at({q.register_id, q.index});
    line(s);
  }

  void emit(const Inst& inst) { body_ << "  " << call_for(inst, /*conditional=*/false) << "\n"; }

  void emit(const ir::ConditionalRegion& c) {
    const auto& creg = program_.cregs.at(static_cast<std::size_t>(c.creg_id));
    line("; if (" + creg.name + " == " + std::to_string(c.value) + ")");
    std::vector<std::string> terms;
    bool always_false = false;
    std::string one;
    for (int bit = 0; bit < creg.size; ++bit) {
      const bool want = bit < 63 && ((c.value >> bit) & 1) != 0;
      const auto it = latest_result_.find({c.creg_id, bit});
      if (it == latest_result_.end()) {
        // unmeasured bits read as zero
        if (want) always_false = true;
        continue;
      }
      if (one.empty()) {
        declared_.insert(std::string(kResultOne));
        one = fresh();
        line(one + " = call %Result* @__quantum__rt__result_get_one()");
      }
      declared_.insert(std::string(kResultEqual));
      std::string is_one = fresh();
      line(is_one + " = call i1 @__quantum__rt__result_equal(%Result* " + it->second +
           ", %Result* " + one + ")");
      if (!want) {
        const std::string negated = fresh();
        line(negated + " = xor i1 " + is_one + ", true");
        is_one = negated;
      }
      terms.push_back(is_one);
    }
    std::string cond = "true";
    if (always_false) {
      cond = "false";
    } else if (!terms.empty()) {
      cond = terms.front();
      for (std::size_t i = 1; i < terms.size(); ++i) {
        const std::string both = fresh();
        line(both + " = and i1 " + cond + ", " + terms[i]);
        cond = both;
      }
    }
    const std::string id = std::to_string(next_block_++);
    line("br i1 " + cond + ", label %then" + id + ", label %cont" + id);
    body_ << "then" << id << ":\n";
    body_ << "  " << call_for(c.body, /*conditional=*/true) << "\n";
    line("br label %cont" + id);
    body_ << "cont" << id << ":\n";
  }

  void extract(int register_id, int index) {
    declared_.insert(std::string(kElementPtr));
    const std::string ptr = fresh();
    line(ptr + " = call i8* @__quantum__rt__array_get_element_ptr(%Array* " +
         arrays_.at(register_id) + ", i64 " + std::to_string(index) + ")");
    const std::string qubit = fresh();
    line(qubit + " = bitcast i8* " + ptr + " to %Qubit*");
    qubits_[{register_id, index}] = qubit;
  }

  const std::string& handle(const ir::QubitRef& q) const {
    const auto it = qubits_.find({q.register_id, q.index});
    if (it == qubits_.end()) {
      throw EmitError("qubit used outside of its allocation");
    }
    return it->second;
  }

  std::string call_for(const Inst& inst, bool conditional) {
    if (inst.is_measure()) {
      if (conditional) {
        throw EmitError("conditional measurement has no QIR lowering", inst.span);
      }
      declared_.insert(std::string(kMeasureDecl));
      const std::string result = fresh();
      std::string s = result + " = call %Result* @__quantum__qis__m(%Qubit* " +
                      handle(inst.qubits.front()) + ")";
      const auto& creg =
          program_.cregs.at(static_cast<std::size_t>(inst.result->creg_id));
      result_targets_.push_back(creg.name + "[" + std::to_string(inst.result->index) + "]");
      latest_result_[{inst.result->creg_id, inst.result->index}] = result;
      return s;
    }
    const ir::GateInfo* info = ir::find_primitive(inst.gate);
    if (!inst.is_reset() && (info == nullptr || inst.matrix)) {
      throw EmitError("gate '" + inst.gate + "' has no QIS mapping", inst.span);
    }
    const int n_params = info ? info->num_params : 0;
    std::string signature;
    std::string args;
    for (int i = 0; i < n_params; ++i) {
      signature += signature.empty() ? "double" : ", double";
      if (!args.empty()) args += ", ";
      args += "double " + format_double(inst.params[static_cast<std::size_t>(i)]);
    }
    for (const auto& q : inst.qubits) {
      signature += signature.empty() ? "%Qubit*" : ", %Qubit*";
      if (!args.empty()) args += ", ";
      args += "%Qubit* " + handle(q);
    }
    const std::string fn = "@__quantum__qis__" + inst.gate;
    declared_.insert("declare void " + fn + "(" + signature + ")");
    return "call void " + fn + "(" + args + ")";
  }

  const ir::QuantumProgram& program_;
  std::string kernel_;
  std::ostringstream body_;
  int next_value_ = 0;
  int next_block_ = 0;
  std::set<std::string> declared_;
  std::map<int, std::vector<bool>> used_;
  std::map<int, std::string> arrays_;
  std::map<std::pair<int, int>, std::string> qubits_;
  std::map<std::pair<int, int>, std::string> latest_result_;
  std::vector<std::string> result_targets_;
};

}  // namespace

QirModule emit_qir(const ir::QuantumProgram& program, std::string_view kernel_name) {
  return Emitter(program, kernel_name).run();
}

}  // namespace qcc::qir

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
#include "qcc/opt/native_gates.hpp"

#include <sstream>

#include "qcc/error.hpp"
#include "qcc/ir/gate_table.hpp"

namespace qcc::opt {

NativeGateSet::NativeGateSet()
    : names_{"rz", "ry", "rx", "cx", "h", "swap", "measure", "reset"} {}

NativeGateSet::NativeGateSet(std::set<std::string> names) : names_(std::move(names)) {
  names_.insert(std::string(ir::kMeasure));
  names_.insert(std::string(ir::kReset));
  validate();
}

NativeGateSet NativeGateSet::parse(std::string_view csv) {
  std::set<std::string> names;
  std::string item;
  std::istringstream in{std::string(csv)};
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) continue;
    item = item.substr(first, last - first + 1);
    if (ir::gate_arity(item) < 0 || item == ir::kFusedUnitary) {
      throw ConfigError("unknown native gate '" + item + "'");
    }
    names.insert(item);
  }
  return NativeGateSet(std::move(names));
}

bool NativeGateSet::contains(std::string_view gate) const {
  return names_.find(std::string(gate)) != names_.end();
}

std::string NativeGateSet::to_string() const {
  std::string out;
  for (const auto& n : names_) {
    if (!out.empty()) out += ",";
    out += n;
  }
  return out;
}

void NativeGateSet::validate() const {
  if (!contains("cx") && !contains("cz")) {
    throw ConfigError("native gate set needs an entangling gate (cx or cz)");
  }
  const int axes = static_cast<int>(contains("rx")) + static_cast<int>(contains("ry")) +
                   static_cast<int>(contains("rz"));
  if (axes < 2) {
    throw ConfigError("native gate set needs rotations about two distinct axes");
  }
}

}  // namespace qcc::opt

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

#include <set>
#include <string>
#include <string_view>

namespace qcc::opt {

/// Gates the target executes directly. measure and reset are always allowed.
class NativeGateSet {
 public:
  /// {rz, ry, rx, cx, h, swap, measure, reset}
  NativeGateSet();
  explicit NativeGateSet(std::set<std::string> names);

  /// Comma-separated list, e.g. "rz,ry,cx". Throws ConfigError on unknown
  /// names or when the set is not universal (no entangling gate, or fewer
  /// than two rotation axes).
  static NativeGateSet parse(std::string_view csv);

  [[nodiscard]] bool contains(std::string_view gate) const;
  [[nodiscard]] const std::set<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] std::string to_string() const;

 private:
  void validate() const;

  std::set<std::string> names_;
};

}  // namespace qcc::opt

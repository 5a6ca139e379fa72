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

#include <vector>

namespace qcc::route {

/// Injective map from logical to physical qubits. Physical slots not hosting
/// a logical qubit read -1 in the inverse map.
class Layout {
 public:
  Layout() = default;
  /// Throws RoutingError unless `log_to_phys` is injective into 0..n_physical-1.
  Layout(std::vector<int> log_to_phys, int n_physical);

  static Layout identity(int n_logical, int n_physical);

  [[nodiscard]] int n_logical() const noexcept { return static_cast<int>(l2p_.size()); }
  [[nodiscard]] int n_physical() const noexcept { return static_cast<int>(p2l_.size()); }
  [[nodiscard]] int phys(int logical) const { return l2p_[static_cast<std::size_t>(logical)]; }
  [[nodiscard]] int logical(int physical) const {
    return p2l_[static_cast<std::size_t>(physical)];
  }
  [[nodiscard]] const std::vector<int>& log_to_phys() const noexcept { return l2p_; }
  [[nodiscard]] const std::vector<int>& phys_to_log() const noexcept { return p2l_; }

  /// Exchanges whatever the two physical qubits host.
  void swap_physical(int p, int q);

  /// Qubit permutation over n_physical slots: logical l goes to phys(l), the
  /// remaining slots n_logical.. fill the unassigned physical qubits in
  /// ascending order. This is how a routed state relates to the original one
  /// padded with |0> spares.
  [[nodiscard]] std::vector<int> as_permutation() const;

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  std::vector<int> l2p_;
  std::vector<int> p2l_;
};

}  // namespace qcc::route

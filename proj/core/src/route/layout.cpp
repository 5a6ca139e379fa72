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
#include "qcc/route/layout.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "qcc/error.hpp"

namespace qcc::route {

Layout::Layout(std::vector<int> log_to_phys, int n_physical)
    : l2p_(std::move(log_to_phys)), p2l_(static_cast<std::size_t>(n_physical), -1) {
  if (static_cast<int>(l2p_.size()) > n_physical) {
    throw CapacityError("layout maps " + std::to_string(l2p_.size()) + " logical qubits onto " +
                        std::to_string(n_physical) + " physical qubits");
  }
  for (std::size_t l = 0; l < l2p_.size(); ++l) {
    const int p = l2p_[l];
    if (p < 0 || p >= n_physical) {
      throw RoutingError("layout sends logical qubit " + std::to_string(l) +
                         " outside the device");
    }
    if (p2l_[static_cast<std::size_t>(p)] >= 0) {
      throw RoutingError("layout is not injective at physical qubit " + std::to_string(p));
    }
    p2l_[static_cast<std::size_t>(p)] = static_cast<int>(l);
  }
}

Layout Layout::identity(int n_logical, int n_physical) {
  std::vector<int> l2p(static_cast<std::size_t>(n_logical));
  std::iota(l2p.begin(), l2p.end(), 0);
  return Layout(std::move(l2p), n_physical);
}

void Layout::swap_physical(int p, int q) {
  const int a = p2l_[static_cast<std::size_t>(p)];
  const int b = p2l_[static_cast<std::size_t>(q)];
  std::swap(p2l_[static_cast<std::size_t>(p)], p2l_[static_cast<std::size_t>(q)]);
  if (a >= 0) l2p_[static_cast<std::size_t>(a)] = q;
  if (b >= 0) l2p_[static_cast<std::size_t>(b)] = p;
}

std::vector<int> Layout::as_permutation() const {
  std::vector<int> perm = l2p_;
  for (int p = 0; p < n_physical(); ++p) {
    if (logical(p) < 0) perm.push_back(p);
  }
  return perm;
}

}  // namespace qcc::route

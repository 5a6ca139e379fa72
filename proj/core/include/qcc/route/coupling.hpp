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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcc::route {

/// Undirected hardware connectivity with all-pairs hop distances.
class CouplingGraph {
 public:
  /// Deduplicates and symmetrizes `edges`. Throws FormatError on self loops
  /// or out-of-range vertices and RoutingError when the graph is disconnected.
  CouplingGraph(int n_physical, const std::vector<std::pair<int, int>>& edges);

  [[nodiscard]] int n_physical() const noexcept { return n_; }
  [[nodiscard]] const std::vector<std::vector<int>>& adjacency() const noexcept {
    return adjacency_;
  }
  [[nodiscard]] const std::vector<int>& neighbors(int p) const {
    return adjacency_[static_cast<std::size_t>(p)];
  }
  [[nodiscard]] int distance(int u, int v) const {
    return distance_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  }
  [[nodiscard]] const std::vector<std::vector<int>>& distance_matrix() const noexcept {
    return distance_;
  }
  [[nodiscard]] bool adjacent(int u, int v) const { return distance(u, v) == 1; }
  /// Each undirected edge once as (u, v) with u < v, sorted.
  [[nodiscard]] std::vector<std::pair<int, int>> edges() const;
  /// Vertices of one shortest path from u to v, both ends included.
  [[nodiscard]] std::vector<int> shortest_path(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> distance_;
};

/// `{"n_qubits": N, "edges": [[u, v], ...]}`
CouplingGraph parse_coupling_graph(std::string_view json_text);
CouplingGraph load_coupling_graph(const std::string& path);

CouplingGraph linear_graph(int n);
CouplingGraph ring_graph(int n);
CouplingGraph complete_graph(int n);

}  // namespace qcc::route

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
#include "qcc/route/coupling.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qcc/error.hpp"

namespace qcc::route {

CouplingGraph::CouplingGraph(int n_physical, const std::vector<std::pair<int, int>>& edges)
    : n_(n_physical) {
  if (n_physical < 1) throw FormatError("coupling graph needs at least one qubit");
  const auto n = static_cast<std::size_t>(n_physical);
  std::vector<std::set<int>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_physical || v >= n_physical) {
      throw FormatError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") has a vertex outside 0.." + std::to_string(n_physical - 1));
    }
    if (u == v) throw FormatError("self loop on qubit " + std::to_string(u));
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  adjacency_.resize(n);
  for (std::size_t i = 0; i < n; ++i) adjacency_[i].assign(adj[i].begin(), adj[i].end());

  // BFS from every vertex.
  distance_.assign(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    auto& dist = distance_[s];
    dist[s] = 0;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adjacency_[static_cast<std::size_t>(u)]) {
        auto& dv = dist[static_cast<std::size_t>(v)];
        if (dv < 0) {
          dv = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
      throw RoutingError("coupling graph is disconnected");
    }
  }
}

std::vector<std::pair<int, int>> CouplingGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> CouplingGraph::shortest_path(int u, int v) const {
  std::vector<int> path{u};
  while (path.back() != v) {
    const int here = path.back();
    for (int next : neighbors(here)) {
      if (distance(next, v) == distance(here, v) - 1) {
        path.push_back(next);
        break;
      }
    }
  }
  return path;
}

CouplingGraph parse_coupling_graph(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("coupling file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("edges")) {
    throw FormatError("coupling file must have \"n_qubits\" and \"edges\"");
  }
  if (!j["n_qubits"].is_number_integer()) throw FormatError("\"n_qubits\" must be an integer");
  if (!j["edges"].is_array()) throw FormatError("\"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw FormatError("each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return CouplingGraph(j["n_qubits"].get<int>(), edges);
}

CouplingGraph load_coupling_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open coupling file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coupling_graph(ss.str());
}

CouplingGraph linear_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return CouplingGraph(n, edges);
}

CouplingGraph ring_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n && n > 1; ++i) {
    if ((i + 1) % n != i) edges.emplace_back(i, (i + 1) % n);
  }
  return CouplingGraph(n, edges);
}

CouplingGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return CouplingGraph(n, edges);
}

}  // namespace qcc::route

// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qroute/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace qroute {

InteractionGraph::InteractionGraph(int num_qubits) {
  groups_.resize(num_qubits);
  for (int q = 0; q < num_qubits; ++q) groups_[q].qubits = {q};
  w_.assign(num_qubits, std::vector<double>(num_qubits, 0.0));
}

void InteractionGraph::add_weight(int u, int v, double delta) {
  w_[u][v] += delta;
  w_[v][u] += delta;
}

double InteractionGraph::total_weight() const {
  double sum = 0;
  for (int u = 0; u < num_vertices(); ++u)
    for (int v = u + 1; v < num_vertices(); ++v) sum += w_[u][v];
  return sum;
}

InteractionGraph InteractionGraph::build(const DependencyState& state,
                                         int num_qubits,
                                         const std::optional<Mapping>& prev,
                                         double alpha, double beta, int tau) {
  if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1 || tau < 0)
    throw std::invalid_argument("interaction graph parameters out of range");

  InteractionGraph g(num_qubits);
  const int big_t = state.max_layer();
  for (int j : state.remaining_indices()) {
    if (state.forward_layer(j) > tau) continue;
    auto [c, t] = state.cnots()[j];
    // pow(0, 0) == 1, so heads of longest chains keep weight at alpha == 0.
    g.add_weight(c, t, std::pow(alpha, big_t - state.reverse_layer(j)));
  }
  if (prev) {
    for (int pos = 0; pos + 1 < prev->size(); ++pos)
      g.add_weight(prev->qubit_at[pos], prev->qubit_at[pos + 1], beta);
  }
  return g;
}

void InteractionGraph::force_couple(
    const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) return;

  std::vector<int> vertex_of(0);
  {
    int m = 0;
    for (const auto& g : groups_)
      for (int q : g.qubits) m = std::max(m, q + 1);
    vertex_of.assign(m, -1);
    for (int v = 0; v < num_vertices(); ++v)
      for (int q : groups_[v].qubits) vertex_of[q] = v;
  }

  // Map each vertex to its merge partner; reject overlaps and refusals.
  std::vector<int> partner(num_vertices(), -1);
  for (const auto& [a, b] : pairs) {
    int va = vertex_of.at(a);
    int vb = vertex_of.at(b);
    if (va == vb || partner[va] != -1 || partner[vb] != -1 ||
        groups_[va].qubits.size() != 1 || groups_[vb].qubits.size() != 1)
      throw OverlappingPairs();
    partner[va] = vb;
    partner[vb] = va;
  }

  // Contract: keep the lower-indexed vertex of each pair, absorbing the
  // other; edge weights to third vertices add, internal weight is dropped.
  std::vector<int> new_index(num_vertices(), -1);
  std::vector<VertexGroup> new_groups;
  for (int v = 0; v < num_vertices(); ++v) {
    if (partner[v] != -1 && partner[v] < v) continue;  // absorbed
    new_index[v] = static_cast<int>(new_groups.size());
    VertexGroup g = groups_[v];
    if (partner[v] != -1) {
      g.qubits.push_back(groups_[partner[v]].qubits[0]);
      std::sort(g.qubits.begin(), g.qubits.end());
    }
    new_groups.push_back(std::move(g));
  }

  std::vector<std::vector<double>> nw(
      new_groups.size(), std::vector<double>(new_groups.size(), 0.0));
  for (int u = 0; u < num_vertices(); ++u) {
    int nu = new_index[u] != -1 ? new_index[u] : new_index[partner[u]];
    for (int v = u + 1; v < num_vertices(); ++v) {
      int nv = new_index[v] != -1 ? new_index[v] : new_index[partner[v]];
      if (nu == nv) continue;
      nw[nu][nv] += w_[u][v];
      nw[nv][nu] += w_[u][v];
    }
  }

  groups_ = std::move(new_groups);
  w_ = std::move(nw);
}

void InteractionGraph::dump_csv(std::ostream& os) const {
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v = 0; v < num_vertices(); ++v) {
      if (v) os << ',';
      os << w_[u][v];
    }
    os << '\n';
  }
}

std::vector<std::pair<int, int>> priority_pairs(const DependencyState& state) {
  if (state.remaining_count() == 0) throw EmptyCircuit();
  std::vector<std::pair<int, int>> pairs;
  for (int j : state.front_layer())
    if (state.reverse_layer(j) == state.max_layer())
      pairs.push_back(state.cnots()[j]);
  return pairs;
}

}  // namespace qroute

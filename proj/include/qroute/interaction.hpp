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

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qroute/dependency.hpp"
#include "qroute/mapping.hpp"

namespace qroute {

class EmptyCircuit : public std::logic_error {
 public:
  EmptyCircuit() : std::logic_error("no remaining CNOTs") {}
};

class OverlappingPairs : public std::logic_error {
 public:
  OverlappingPairs() : std::logic_error("forced pairs share a qubit") {}
};

/// One vertex of the interaction graph: a single logical qubit, or the two
/// qubits of a forced pair after fusion.
struct VertexGroup {
  std::vector<int> qubits;  // 1 or 2 entries, ascending
};

/// Weighted undirected graph over logical qubits whose edge weights measure
/// how urgently two qubits should sit next to each other. Weights combine a
/// layer-discounted contribution from each unapplied CNOT within the cutoff
/// window and a flat bonus for pairs adjacent under the previous mapping.
class InteractionGraph {
 public:
  explicit InteractionGraph(int num_qubits);

  /// Weight of CNOT i: alpha^(T - t_rev[i]) summed over remaining CNOTs on
  /// the pair with t_fwd <= tau, plus beta when the pair was adjacent under
  /// prev. With no previous mapping the beta term is dropped. Qubits that
  /// appear in no in-window CNOT stay as zero-degree vertices.
  static InteractionGraph build(const DependencyState& state, int num_qubits,
                                const std::optional<Mapping>& prev,
                                double alpha, double beta, int tau);

  /// Fuses each (a, b) pair into one vertex; edges to any third vertex carry
  /// the sum of the pair's previous edge weights, the internal weight is
  /// dropped. Pairs must be disjoint and currently unfused.
  void force_couple(const std::vector<std::pair<int, int>>& pairs);

  int num_vertices() const { return static_cast<int>(groups_.size()); }
  const std::vector<VertexGroup>& groups() const { return groups_; }
  double weight(int u, int v) const { return w_[u][v]; }
  void add_weight(int u, int v, double delta);

  /// Sum of w(u, v) over unordered vertex pairs.
  double total_weight() const;

  void dump_csv(std::ostream& os) const;

 private:
  std::vector<VertexGroup> groups_;
  std::vector<std::vector<double>> w_;
};

/// Qubit pairs of the front-layer CNOTs heading longest dependency chains
/// (reverse layer equal to T). Nonempty on any nonempty circuit; the pairs
/// are pairwise disjoint.
std::vector<std::pair<int, int>> priority_pairs(const DependencyState& state);

}  // namespace qroute

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

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qroute {

class NotInFrontLayer : public std::logic_error {
 public:
  explicit NotInFrontLayer(int index)
      : std::logic_error("CNOT " + std::to_string(index) +
                         " is not in the front layer") {}
};

/// Dependency structure over the unapplied CNOTs of a circuit.
///
/// CNOT i directly blocks CNOT j (i < j) when both act on some qubit and no
/// CNOT in between acts on it. The forward layer of a CNOT is the earliest
/// greedy layer it can occupy; the reverse layer is its forward layer in the
/// reversed gate list. CNOTs with forward layer 0 form the front layer and
/// are the candidates for immediate application.
///
/// apply_cnot removes a front-layer CNOT and keeps the blocker sets and front
/// layer exact; the layer values go stale until refresh_layers recomputes
/// them in a single pass over the remaining gates.
class DependencyState {
 public:
  static DependencyState build(std::vector<std::pair<int, int>> cnots);

  /// Remaining CNOT indices with no remaining direct blocker, ascending.
  const std::set<int>& front_layer() const { return front_; }

  void apply_cnot(int j);
  void refresh_layers();

  int forward_layer(int j) const { return t_fwd_[j]; }
  int reverse_layer(int j) const { return t_rev_[j]; }
  /// Maximum forward (equivalently reverse) layer T; 0 when empty.
  int max_layer() const { return t_max_; }

  bool is_remaining(int j) const { return alive_[j] != 0; }
  int remaining_count() const { return alive_count_; }
  std::vector<int> remaining_indices() const;

  const std::vector<std::pair<int, int>>& cnots() const { return cnots_; }
  const std::vector<int>& blockers(int j) const { return blockers_[j]; }
  const std::vector<int>& cnots_in_layer(int t) const;

 private:
  void recompute();

  std::vector<std::pair<int, int>> cnots_;
  std::vector<char> alive_;
  std::vector<std::vector<int>> blockers_;    // current direct blockers b(j)
  std::vector<std::vector<int>> blocked_by_;  // reverse adjacency
  std::vector<int> t_fwd_;
  std::vector<int> t_rev_;
  std::vector<std::vector<int>> layer_index_;  // layer -> remaining CNOTs
  std::set<int> front_;
  int t_max_ = 0;
  int alive_count_ = 0;
};

}  // namespace qroute

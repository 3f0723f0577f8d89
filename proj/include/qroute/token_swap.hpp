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

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qroute/mapping.hpp"

namespace qroute {

class AllTokensPlaced : public std::logic_error {
 public:
  AllTokensPlaced() : std::logic_error("every token is on its target") {}
};

class StateSpaceTooLarge : public std::runtime_error {
 public:
  explicit StateSpaceTooLarge(int m)
      : std::runtime_error("BFS oracle state space " + std::to_string(m) +
                           "! exceeds the limit") {}
};

/// Sequence of SWAPs between line-adjacent positions; each pair is (i, i+1).
struct SwapSequence {
  std::vector<std::pair<int, int>> swaps;

  int size() const { return static_cast<int>(swaps.size()); }
  bool empty() const { return swaps.empty(); }
};

/// Directed graph over positions: an edge u -> v (a path edge) is present iff
/// swapping u and v moves the token on u strictly closer to its target.
/// A vertex has out-degree 0 exactly when its token is home.
struct CompanionGraph {
  std::vector<std::vector<int>> out;  // ascending neighbor lists

  int n() const { return static_cast<int>(out.size()); }
};

CompanionGraph companion_graph(const Mapping& current, const Mapping& target);

/// Either a directed cycle in the companion graph (each token on it ends one
/// step closer after the rotation) or a single swap that displaces a homed
/// token while advancing a misplaced one.
struct TokenOperation {
  enum class Kind { HappyChain, UnhappySwap };

  Kind kind;
  std::vector<int> vertices;  // cycle c1..cr, or the edge {u, v}
};

/// Walks the companion graph from the lowest misplaced vertex, always taking
/// the lowest out-edge, until it closes a cycle (happy chain) or steps into a
/// vertex with no out-edge (unhappy swap). Throws when every token is placed.
TokenOperation find_operation(const CompanionGraph& f);

/// Approximate token swapping on the line: repeatedly finds and performs an
/// operation until current equals target. On trees the result is within
/// twice the optimal length.
SwapSequence token_swap_sequence(const Mapping& current, const Mapping& target);

/// Exact minimum swap count by breadth-first search over permutations.
/// Intended as a desk-scale oracle; throws once m! exceeds max_states.
int bfs_optimal_swaps(const Mapping& current, const Mapping& target,
                      std::size_t max_states = 50000);

}  // namespace qroute

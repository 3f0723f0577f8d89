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

#include "qroute/token_swap.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

namespace qroute {

namespace {

// The algorithm is written against this small topology view so that only the
// construction below pins it to the line; everything else works on any
// connected graph with a metric.
struct Topology {
  std::vector<std::vector<int>> neighbors;  // ascending
  int (*dist)(int, int);

  int n() const { return static_cast<int>(neighbors.size()); }
};

Topology path_topology(int m) {
  Topology t;
  t.neighbors.resize(m);
  for (int v = 0; v < m; ++v) {
    if (v > 0) t.neighbors[v].push_back(v - 1);
    if (v + 1 < m) t.neighbors[v].push_back(v + 1);
  }
  t.dist = [](int a, int b) { return a < b ? b - a : a - b; };
  return t;
}

CompanionGraph companion_for(const Topology& topo, const Mapping& current,
                             const Mapping& target) {
  CompanionGraph f;
  f.out.resize(topo.n());
  for (int v = 0; v < topo.n(); ++v) {
    int token_target = target.position_of[current.qubit_at[v]];
    for (int w : topo.neighbors[v])
      if (topo.dist(w, token_target) < topo.dist(v, token_target))
        f.out[v].push_back(w);
  }
  return f;
}

std::pair<int, int> ordered(int a, int b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

CompanionGraph companion_graph(const Mapping& current, const Mapping& target) {
  return companion_for(path_topology(current.size()), current, target);
}

TokenOperation find_operation(const CompanionGraph& f) {
  int start = -1;
  for (int v = 0; v < f.n(); ++v) {
    if (!f.out[v].empty()) {
      start = v;
      break;
    }
  }
  if (start == -1) throw AllTokensPlaced();

  std::vector<int> walk{start};
  std::vector<int> position_in_walk(f.n(), -1);
  position_in_walk[start] = 0;

  while (true) {
    int v = walk.back();
    if (f.out[v].empty()) {
      // Stepped into a homed token: the closing edge is an unhappy swap.
      return {TokenOperation::Kind::UnhappySwap,
              {walk[walk.size() - 2], v}};
    }
    int w = f.out[v][0];
    if (position_in_walk[w] != -1) {
      return {TokenOperation::Kind::HappyChain,
              std::vector<int>(walk.begin() + position_in_walk[w],
                               walk.end())};
    }
    position_in_walk[w] = static_cast<int>(walk.size());
    walk.push_back(w);
  }
}

SwapSequence token_swap_sequence(const Mapping& current,
                                 const Mapping& target) {
  const int m = current.size();
  Mapping cur = current;
  SwapSequence seq;

  // Convergence is guaranteed; the cap only turns a logic bug into a loud
  // failure instead of a hang.
  const long cap = 4L * m * m + 16;
  while (cur != target) {
    if (static_cast<long>(seq.swaps.size()) > cap)
      throw std::logic_error("token swapping failed to converge");

    CompanionGraph f = companion_graph(cur, target);
    TokenOperation op = find_operation(f);
    if (op.kind == TokenOperation::Kind::UnhappySwap) {
      seq.swaps.push_back(ordered(op.vertices[0], op.vertices[1]));
      cur.swap_positions(op.vertices[0], op.vertices[1]);
    } else {
      // Rotate every token one step along the cycle c1 -> c2 -> ... -> c1
      // using the swaps (c_{r-1}, c_r), ..., (c1, c2).
      const auto& c = op.vertices;
      for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
        seq.swaps.push_back(ordered(c[i], c[i + 1]));
        cur.swap_positions(c[i], c[i + 1]);
      }
    }
  }
  return seq;
}

namespace {

// Permutations of m elements ranked by Lehmer code; m <= 12 or so.
std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

std::uint64_t rank_permutation(const std::vector<int>& perm) {
  const int m = static_cast<int>(perm.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank = rank * (m - i) + smaller;
  }
  return rank;
}

}  // namespace

int bfs_optimal_swaps(const Mapping& current, const Mapping& target,
                      std::size_t max_states) {
  const int m = current.size();
  std::uint64_t states = factorial(m);
  if (states > max_states) throw StateSpaceTooLarge(m);

  // Reduce to sorting the position permutation rho (token at p goes to
  // rho[p]) into the identity by adjacent transpositions.
  std::vector<int> rho(m);
  for (int p = 0; p < m; ++p)
    rho[p] = target.position_of[current.qubit_at[p]];

  std::vector<int> identity(m);
  for (int i = 0; i < m; ++i) identity[i] = i;
  const std::uint64_t goal = rank_permutation(identity);
  const std::uint64_t start = rank_permutation(rho);
  if (start == goal) return 0;

  std::vector<int> dist(states, -1);
  std::queue<std::pair<std::vector<int>, std::uint64_t>> frontier;
  dist[start] = 0;
  frontier.push({rho, start});

  while (!frontier.empty()) {
    auto [p, r] = std::move(frontier.front());
    frontier.pop();
    for (int i = 0; i + 1 < m; ++i) {
      std::swap(p[i], p[i + 1]);
      std::uint64_t nr = rank_permutation(p);
      if (dist[nr] == -1) {
        dist[nr] = dist[r] + 1;
        if (nr == goal) return dist[nr];
        frontier.push({p, nr});
      }
      std::swap(p[i], p[i + 1]);
    }
  }
  return dist[goal];  // unreachable: adjacent swaps generate S_m
}

}  // namespace qroute

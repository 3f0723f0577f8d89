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

#include "qroute/generator.hpp"

#include <random>
#include <stdexcept>

namespace qroute {

namespace {

const char* kOneQubitNames[] = {"h", "t", "tdg", "x", "z", "s"};

void sprinkle_one_qubit(LogicalProgram& prog, std::mt19937_64& rng,
                        int count) {
  std::uniform_int_distribution<int> qubit(0, prog.num_qubits - 1);
  std::uniform_int_distribution<int> which(0, 5);
  for (int i = 0; i < count; ++i)
    prog.gates.push_back(
        Gate::one_qubit(kOneQubitNames[which(rng)], {}, qubit(rng)));
}

LogicalProgram base_program(int m) {
  if (m < 2) throw std::invalid_argument("generator needs at least 2 qubits");
  LogicalProgram prog;
  prog.num_qubits = m;
  prog.register_name = "q";
  return prog;
}

}  // namespace

LogicalProgram gen_random(int m, int n, std::uint64_t seed) {
  LogicalProgram prog = base_program(m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> qubit(0, m - 1);
  std::uniform_int_distribution<int> gap(0, 2);
  for (int i = 0; i < n; ++i) {
    int c = qubit(rng);
    int t = qubit(rng);
    while (t == c) t = qubit(rng);
    prog.gates.push_back(Gate::cnot(c, t));
    if (gap(rng) == 0) sprinkle_one_qubit(prog, rng, 1);
  }
  prog.cregs.emplace_back("c", m);
  for (int q = 0; q < m; ++q)
    prog.gates.push_back(Gate::measure(q, "c", q));
  return prog;
}

LogicalProgram gen_linear(int m, int n, std::uint64_t seed) {
  LogicalProgram prog = base_program(m);
  std::mt19937_64 rng(seed);

  if (seed % 2 == 0) {
    // Brick pattern: alternating layers of even and odd adjacent pairs,
    // with 1-qubit gates between rounds.
    int emitted = 0;
    while (emitted < n) {
      for (int parity = 0; parity < 2 && emitted < n; ++parity) {
        for (int k = parity; k + 1 < m && emitted < n; k += 2) {
          prog.gates.push_back(Gate::cnot(k, k + 1));
          ++emitted;
        }
      }
      sprinkle_one_qubit(prog, rng, 2);
    }
  } else {
    // Adjacent staircase cycling through the line's edges.
    for (int i = 0; i < n; ++i) {
      int k = i % (m - 1);
      prog.gates.push_back(Gate::cnot(k, k + 1));
    }
    sprinkle_one_qubit(prog, rng, 2);
  }
  return prog;
}

LogicalProgram gen_chain(int m, int n, std::uint64_t seed) {
  LogicalProgram prog = base_program(m);
  // A staircase where consecutive CNOTs always share exactly one qubit, so
  // nothing commutes and the front layer is a single gate. The qubit walk is
  // seeded, which makes the pairs generally non-adjacent on the line.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> qubit(0, m - 1);
  int prev = qubit(rng);
  for (int i = 0; i < n; ++i) {
    int next = qubit(rng);
    while (next == prev) next = qubit(rng);
    prog.gates.push_back(Gate::cnot(prev, next));
    prev = next;
  }
  return prog;
}

LogicalProgram gen_triangle(int m, int n, std::uint64_t /*seed*/) {
  if (m < 3) throw std::invalid_argument("triangle circuits need 3 qubits");
  LogicalProgram prog = base_program(m);
  const std::pair<int, int> pairs[3] = {{0, 1}, {1, 2}, {0, 2}};
  for (int i = 0; i < n; ++i)
    prog.gates.push_back(Gate::cnot(pairs[i % 3].first, pairs[i % 3].second));
  return prog;
}

LogicalProgram generate(const std::string& kind, int m, int n,
                        std::uint64_t seed) {
  if (kind == "random") return gen_random(m, n, seed);
  if (kind == "linear") return gen_linear(m, n, seed);
  if (kind == "chain") return gen_chain(m, n, seed);
  if (kind == "triangle") return gen_triangle(m, n, seed);
  throw std::invalid_argument("unknown circuit kind '" + kind + "'");
}

}  // namespace qroute

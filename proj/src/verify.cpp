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

#include "qroute/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <vector>

#include "qroute/dependency.hpp"

namespace qroute {

bool check_compliance(const RoutedCircuit& routed) {
  for (const Gate& g : physical_gates(routed, false)) {
    if (g.kind == Gate::Kind::Cnot || g.kind == Gate::Kind::Swap) {
      if (std::abs(g.qubits[0] - g.qubits[1]) != 1) return false;
    }
  }
  return true;
}

bool check_equivalence_permutation(const LogicalProgram& source,
                                   const RoutedCircuit& routed) {
  // Replay the routed circuit, tracking which logical qubit sits on each
  // wire, and recover the logical pair behind every physical CNOT.
  Mapping cur = routed.initial_mapping;
  if (cur.size() != source.num_qubits) return false;

  std::vector<std::pair<int, int>> derived;
  for (const CnotBlock& blk : routed.blocks) {
    for (const auto& [pc, pt] : blk.physical_cnots)
      derived.emplace_back(cur.qubit_at[pc], cur.qubit_at[pt]);
    for (const auto& [a, b] : blk.bridge.swaps) cur.swap_positions(a, b);
  }
  if (!(cur == routed.final_mapping)) return false;

  // The derived sequence must consume the source CNOTs in an order that only
  // commutes disjoint gates: every derived gate must sit in the current
  // front layer.
  LogicalProgram expanded = expand_swaps(source);
  DependencyState deps = DependencyState::build(expanded.cnot_indices());
  if (static_cast<int>(derived.size()) != deps.remaining_count()) return false;

  for (const auto& gate : derived) {
    int match = -1;
    for (int j : deps.front_layer()) {
      if (deps.cnots()[j] == gate) {
        match = j;
        break;
      }
    }
    if (match == -1) return false;
    deps.apply_cnot(match);
  }
  return deps.remaining_count() == 0;
}

namespace {

using Amplitude = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

struct OneQubitMatrix {
  Amplitude m00, m01, m10, m11;
};

OneQubitMatrix u3_matrix(double theta, double phi, double lambda) {
  const Amplitude i(0, 1);
  return {std::cos(theta / 2),
          -std::exp(i * lambda) * std::sin(theta / 2),
          std::exp(i * phi) * std::sin(theta / 2),
          std::exp(i * (phi + lambda)) * std::cos(theta / 2)};
}

OneQubitMatrix gate_matrix(const Gate& g) {
  const Amplitude i(0, 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::string& n = g.name;
  if (n == "u3") return u3_matrix(g.params[0], g.params[1], g.params[2]);
  if (n == "u2") return u3_matrix(kPi / 2, g.params[0], g.params[1]);
  if (n == "u1") return {1, 0, 0, std::exp(i * g.params[0])};
  if (n == "rx") {
    double t = g.params[0] / 2;
    return {std::cos(t), -i * std::sin(t), -i * std::sin(t), std::cos(t)};
  }
  if (n == "ry") {
    double t = g.params[0] / 2;
    return {std::cos(t), Amplitude(-std::sin(t)), Amplitude(std::sin(t)),
            std::cos(t)};
  }
  if (n == "rz") {
    double t = g.params[0] / 2;
    return {std::exp(-i * t), 0, 0, std::exp(i * t)};
  }
  if (n == "h") return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
  if (n == "x") return {0, 1, 1, 0};
  if (n == "y") return {0, -i, i, 0};
  if (n == "z") return {1, 0, 0, -1};
  if (n == "s") return {1, 0, 0, i};
  if (n == "sdg") return {1, 0, 0, -i};
  if (n == "t") return {1, 0, 0, std::exp(i * (kPi / 4))};
  if (n == "tdg") return {1, 0, 0, std::exp(-i * (kPi / 4))};
  if (n == "id") return {1, 0, 0, 1};
  throw std::logic_error("no matrix for gate '" + n + "'");
}

void apply_one_qubit(std::vector<Amplitude>& amp, const OneQubitMatrix& u,
                     int q) {
  const std::uint64_t bit = 1ull << q;
  for (std::uint64_t idx = 0; idx < amp.size(); ++idx) {
    if (idx & bit) continue;
    Amplitude a0 = amp[idx];
    Amplitude a1 = amp[idx | bit];
    amp[idx] = u.m00 * a0 + u.m01 * a1;
    amp[idx | bit] = u.m10 * a0 + u.m11 * a1;
  }
}

void apply_cnot(std::vector<Amplitude>& amp, int control, int target) {
  const std::uint64_t cbit = 1ull << control;
  const std::uint64_t tbit = 1ull << target;
  for (std::uint64_t idx = 0; idx < amp.size(); ++idx)
    if ((idx & cbit) && !(idx & tbit)) std::swap(amp[idx], amp[idx | tbit]);
}

void apply_swap(std::vector<Amplitude>& amp, int a, int b) {
  const std::uint64_t abit = 1ull << a;
  const std::uint64_t bbit = 1ull << b;
  for (std::uint64_t idx = 0; idx < amp.size(); ++idx)
    if ((idx & abit) && !(idx & bbit))
      std::swap(amp[idx ^ abit ^ bbit], amp[idx]);
}

std::vector<Amplitude> simulate(const std::vector<Gate>& gates, int m,
                                std::uint64_t basis_state) {
  std::vector<Amplitude> amp(1ull << m, Amplitude(0));
  amp[basis_state] = 1;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case Gate::Kind::OneQubit:
        apply_one_qubit(amp, gate_matrix(g), g.qubits[0]);
        break;
      case Gate::Kind::Cnot:
        apply_cnot(amp, g.qubits[0], g.qubits[1]);
        break;
      case Gate::Kind::Swap:
        apply_swap(amp, g.qubits[0], g.qubits[1]);
        break;
      case Gate::Kind::Measure:
      case Gate::Kind::Barrier:
        break;
    }
  }
  return amp;
}

// Index permutation for a relabeling pi: bit q of the input becomes bit
// pi(q) of the output.
std::uint64_t permute_index(std::uint64_t idx, const Mapping& pi) {
  std::uint64_t out = 0;
  for (int q = 0; q < pi.size(); ++q)
    if (idx & (1ull << q)) out |= 1ull << pi.position_of[q];
  return out;
}

}  // namespace

bool check_equivalence_unitary(const LogicalProgram& source,
                               const RoutedCircuit& routed, int max_qubits,
                               double atol, bool parallel) {
  const int m = source.num_qubits;
  if (m > max_qubits) throw TooManyQubits(m, max_qubits);
  if (routed.num_qubits != m) return false;

  const std::vector<Gate> source_gates = expand_swaps(source).gates;
  const std::vector<Gate> routed_gates = physical_gates(routed, false);
  const std::uint64_t dim = 1ull << m;

  // Column x of U_routed must equal P_final U_source P_initial^{-1} |x>.
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok) if (parallel)
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (!ok) continue;
    std::vector<Amplitude> lhs = simulate(routed_gates, m, x);

    // P_initial^{-1}|x> is the basis state whose bit q is bit pi0(q) of x.
    std::uint64_t x_logical = 0;
    for (int q = 0; q < m; ++q)
      if (x & (1ull << routed.initial_mapping.position_of[q]))
        x_logical |= 1ull << q;
    std::vector<Amplitude> rhs = simulate(source_gates, m, x_logical);

    bool column_ok = true;
    for (std::uint64_t idx = 0; idx < dim && column_ok; ++idx) {
      std::uint64_t permuted = permute_index(idx, routed.final_mapping);
      if (std::abs(lhs[permuted] - rhs[idx]) > atol) column_ok = false;
    }
    ok = ok && column_ok;
  }
  return ok;
}

int circuit_depth(const RoutedCircuit& routed) {
  std::vector<int> frontier(routed.num_qubits, 0);
  int depth = 0;
  for (const Gate& g : physical_gates(routed, false)) {
    if (g.kind == Gate::Kind::Barrier) {
      int level = 0;
      for (int q : g.qubits) level = std::max(level, frontier[q]);
      for (int q : g.qubits) frontier[q] = level;
      continue;
    }
    int level = 0;
    for (int q : g.qubits) level = std::max(level, frontier[q]);
    ++level;
    for (int q : g.qubits) frontier[q] = level;
    depth = std::max(depth, level);
  }
  return depth;
}

VerificationReport verify(const LogicalProgram& source,
                          const RoutedCircuit& routed, bool with_unitary,
                          int max_qubits, double atol) {
  VerificationReport r;
  r.compliant = check_compliance(routed);
  r.equivalent_permutation = check_equivalence_permutation(source, routed);
  if (with_unitary)
    r.equivalent_unitary =
        check_equivalence_unitary(source, routed, max_qubits, atol);
  r.swap_count = routed.swap_count();
  r.cnot_count = routed.cnot_count();
  r.depth = circuit_depth(routed);
  return r;
}

std::string VerificationReport::to_json() const {
  std::ostringstream os;
  os << "{\"compliant\": " << (compliant ? "true" : "false")
     << ", \"equivalent_permutation\": "
     << (equivalent_permutation ? "true" : "false")
     << ", \"equivalent_unitary\": ";
  if (equivalent_unitary)
    os << (*equivalent_unitary ? "true" : "false");
  else
    os << "null";
  os << ", \"swap_count\": " << swap_count
     << ", \"cnot_count\": " << cnot_count << ", \"depth\": " << depth << "}";
  return os.str();
}

}  // namespace qroute

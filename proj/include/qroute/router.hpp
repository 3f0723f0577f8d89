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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qroute/dependency.hpp"
#include "qroute/mapping.hpp"
#include "qroute/qasm.hpp"
#include "qroute/token_swap.hpp"

namespace qroute {

enum class ForcedMode { Standalone, Fallback };
enum class Direction { Forward, Bidirectional };

struct RouterConfig {
  ForcedMode forced_mode = ForcedMode::Fallback;
  Direction direction = Direction::Forward;
  double alpha = 0.5;
  double beta = 0.6;
  int tau_regular = 0;  // <= 0: defaults to M at route time
  int tau_forced = 0;   // <= 0: defaults to 4M
  std::uint64_t seed = 0;
};

/// CNOTs applied under one mapping, followed by the swap bridge to the next
/// mapping (empty after the last block).
struct CnotBlock {
  Mapping mapping;
  std::vector<std::pair<int, int>> physical_cnots;  // (control pos, target pos)
  std::vector<int> source_indices;                  // source CNOT per gate
  SwapSequence bridge;
};

/// A connectivity-compliant circuit: an initial relabeling, alternating CNOT
/// blocks and swap bridges, and the final mapping through which trailing
/// 1-qubit gates and measurements are wired. The swap-expanded source program
/// is carried along for emission and verification.
struct RoutedCircuit {
  int num_qubits = 0;
  Mapping initial_mapping;
  std::vector<CnotBlock> blocks;
  Mapping final_mapping;
  LogicalProgram source;

  int swap_count() const;
  int cnot_count() const;
};

/// The physical gate sequence of a routed circuit: block CNOTs interleaved
/// with bridge SWAPs (or their three-CNOT decomposition), with the source's
/// 1-qubit gates, barriers and measurements re-attached to the wire holding
/// their logical qubit at the point all their per-qubit predecessors have
/// been applied.
std::vector<Gate> physical_gates(const RoutedCircuit& routed,
                                 bool decompose_swaps);

/// Renders a routed circuit as OpenQASM 2.0. SWAPs are emitted as a `swap`
/// gate (defined inline) or as three `cx` when decompose_swaps is set.
std::string emit_program(const RoutedCircuit& routed,
                         bool decompose_swaps = false);

struct NextMapping {
  Mapping mapping;
  bool used_forced = false;
};

/// One mapper step: spectral placement of the weighted interaction graph,
/// with forced coupling of the priority pairs either always (Standalone) or
/// once the unfused placement leaves every front-layer CNOT non-compliant
/// (Fallback). The returned mapping makes at least one front CNOT compliant.
NextMapping next_mapping(const DependencyState& state,
                         const std::optional<Mapping>& prev,
                         const RouterConfig& cfg, int num_qubits,
                         std::uint64_t iteration_seed);

/// Routes a program onto the line. Swap gates in the input are expanded to
/// CNOTs first. Iteratively generates mappings, greedily applies every
/// compliant front-layer CNOT, and stitches consecutive mappings with the
/// token swapper. Bidirectional mode alternates ends of the circuit and
/// joins the two frontiers with a single bridge.
RoutedCircuit route(const LogicalProgram& program, const RouterConfig& cfg);

struct MetaConfigResult {
  double alpha = 0;
  double beta = 0;
  int swap_count = 0;
  double wall_ms = 0;
};

struct MetaReport {
  std::vector<MetaConfigResult> per_config;
  int chosen_index = -1;
};

/// The ten (alpha, beta) pairs of the meta-algorithm.
const std::vector<std::pair<double, double>>& meta_pairs();

/// Runs the forward, forced-fallback configuration once per (alpha, beta)
/// pair and returns the result with the fewest added SWAPs (ties keep the
/// earliest pair). The runs are independent and execute in parallel when
/// OpenMP is enabled and `parallel` is set; results are identical either way.
RoutedCircuit route_meta(const LogicalProgram& program,
                         std::vector<std::pair<double, double>> pairs = {},
                         MetaReport* report = nullptr, bool parallel = true,
                         std::uint64_t seed = 0);

}  // namespace qroute

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

#include "qroute/router.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <sstream>

#include "qroute/detail/rng.hpp"
#include "qroute/interaction.hpp"
#include "qroute/spectral.hpp"

namespace qroute {

int RoutedCircuit::swap_count() const {
  int n = 0;
  for (const CnotBlock& b : blocks) n += b.bridge.size();
  return n;
}

int RoutedCircuit::cnot_count() const {
  int n = 0;
  for (const CnotBlock& b : blocks)
    n += static_cast<int>(b.physical_cnots.size());
  return n;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, int iteration, int side) {
  return detail::splitmix64(seed ^ detail::splitmix64(
                                       static_cast<std::uint64_t>(iteration) *
                                           2u +
                                       static_cast<std::uint64_t>(side)));
}

// Spectral placement of one interaction graph. Degenerate graphs with a
// single vertex (or none) skip the eigensolve.
Mapping spectral_order(const InteractionGraph& g,
                       const std::optional<Mapping>& prev,
                       std::uint64_t seed) {
  std::vector<double> y(g.num_vertices(), 0.0);
  if (g.num_vertices() >= 2) y = fiedler_vector(laplacian(g));
  return choose_orientation(y, prev, g.groups(), seed);
}

bool any_front_compliant(const DependencyState& state, const Mapping& m) {
  for (int j : state.front_layer()) {
    auto [c, t] = state.cnots()[j];
    if (m.adjacent(c, t)) return true;
  }
  return false;
}

// Applies every compliant front-layer CNOT in circuit order, rescanning
// after each admission so newly unblocked gates are picked up. Returns the
// applied indices in application order.
std::vector<int> apply_compliant(DependencyState& state, const Mapping& m) {
  std::vector<int> applied;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int j : state.front_layer()) {
      auto [c, t] = state.cnots()[j];
      if (m.adjacent(c, t)) {
        state.apply_cnot(j);
        applied.push_back(j);
        progress = true;
        break;
      }
    }
  }
  return applied;
}

}  // namespace

NextMapping next_mapping(const DependencyState& state,
                         const std::optional<Mapping>& prev,
                         const RouterConfig& cfg, int num_qubits,
                         std::uint64_t iteration_seed) {
  if (state.remaining_count() == 0) throw EmptyCircuit();
  const int tau_regular = cfg.tau_regular > 0 ? cfg.tau_regular : num_qubits;
  const int tau_forced = cfg.tau_forced > 0 ? cfg.tau_forced : 4 * num_qubits;

  if (cfg.forced_mode == ForcedMode::Fallback) {
    InteractionGraph g = InteractionGraph::build(state, num_qubits, prev,
                                                 cfg.alpha, cfg.beta,
                                                 tau_regular);
    Mapping m = spectral_order(g, prev, iteration_seed);
    if (any_front_compliant(state, m)) return {std::move(m), false};
  }

  InteractionGraph g = InteractionGraph::build(state, num_qubits, prev,
                                               cfg.alpha, cfg.beta, tau_forced);
  g.force_couple(priority_pairs(state));
  Mapping m = spectral_order(g, prev, iteration_seed);
  assert(any_front_compliant(state, m));
  return {std::move(m), true};
}

namespace {

struct Segment {
  Mapping mapping;
  std::vector<int> gate_ids;  // source CNOT indices in emission order
};

std::vector<Segment> route_forward(
    const std::vector<std::pair<int, int>>& cnots, const RouterConfig& cfg,
    int num_qubits) {
  std::vector<Segment> segments;
  DependencyState deps = DependencyState::build(cnots);
  std::optional<Mapping> prev;
  int iteration = 0;
  while (deps.remaining_count() > 0) {
    NextMapping nm = next_mapping(deps, prev, cfg, num_qubits,
                                  mix_seed(cfg.seed, iteration, 0));
    std::vector<int> applied = apply_compliant(deps, nm.mapping);
    assert(!applied.empty());
    deps.refresh_layers();
    prev = nm.mapping;
    segments.push_back({std::move(nm.mapping), std::move(applied)});
    ++iteration;
  }
  return segments;
}

std::vector<Segment> route_bidirectional(
    const std::vector<std::pair<int, int>>& cnots, const RouterConfig& cfg,
    int num_qubits) {
  const int n = static_cast<int>(cnots.size());
  std::vector<char> alive(n, 1);
  int remaining = n;

  std::optional<Mapping> prev_fwd, prev_rev;
  std::vector<Segment> fwd_segments, rev_segments;

  // One frontier step: builds the dependency structure over the remaining
  // gates (reversed for the backward frontier), generates a mapping, and
  // greedily consumes compliant front gates.
  auto step = [&](bool reversed, std::optional<Mapping>& prev,
                  std::vector<Segment>& out, int iteration) {
    std::vector<std::pair<int, int>> local;
    std::vector<int> ids;
    local.reserve(remaining);
    ids.reserve(remaining);
    if (!reversed) {
      for (int i = 0; i < n; ++i)
        if (alive[i]) {
          local.push_back(cnots[i]);
          ids.push_back(i);
        }
    } else {
      for (int i = n - 1; i >= 0; --i)
        if (alive[i]) {
          local.push_back(cnots[i]);
          ids.push_back(i);
        }
    }

    DependencyState deps = DependencyState::build(std::move(local));
    NextMapping nm = next_mapping(deps, prev, cfg, num_qubits,
                                  mix_seed(cfg.seed, iteration, reversed));
    std::vector<int> applied_local = apply_compliant(deps, nm.mapping);
    assert(!applied_local.empty());

    Segment seg;
    seg.mapping = std::move(nm.mapping);
    for (int l : applied_local) {
      seg.gate_ids.push_back(ids[l]);
      alive[ids[l]] = 0;
      --remaining;
    }
    // Gates consumed from the reversed circuit appear in the output in
    // original order, i.e. in reverse order of application.
    if (reversed) std::reverse(seg.gate_ids.begin(), seg.gate_ids.end());
    prev = seg.mapping;
    out.push_back(std::move(seg));
  };

  int iteration = 0;
  while (remaining > 0) {
    step(false, prev_fwd, fwd_segments, iteration);
    if (remaining == 0) break;
    step(true, prev_rev, rev_segments, iteration);
    ++iteration;
  }

  // Forward blocks, one bridge to the deepest reverse mapping, then the
  // reverse blocks played back towards the circuit's end.
  std::vector<Segment> segments = std::move(fwd_segments);
  for (auto it = rev_segments.rbegin(); it != rev_segments.rend(); ++it)
    segments.push_back(std::move(*it));
  return segments;
}

}  // namespace

RoutedCircuit route(const LogicalProgram& program, const RouterConfig& cfg) {
  LogicalProgram prog = expand_swaps(program);
  const int m = prog.num_qubits;
  const std::vector<std::pair<int, int>> cnots = prog.cnot_indices();

  RoutedCircuit out;
  out.num_qubits = m;
  out.source = std::move(prog);

  if (cnots.empty()) {
    out.initial_mapping = Mapping::identity(m);
    out.final_mapping = out.initial_mapping;
    return out;
  }

  std::vector<Segment> segments =
      cfg.direction == Direction::Forward
          ? route_forward(cnots, cfg, m)
          : route_bidirectional(cnots, cfg, m);

  out.initial_mapping = segments.front().mapping;
  out.final_mapping = segments.back().mapping;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    CnotBlock blk;
    blk.mapping = segments[i].mapping;
    for (int gid : segments[i].gate_ids) {
      auto [c, t] = cnots[gid];
      blk.physical_cnots.emplace_back(blk.mapping.position_of[c],
                                      blk.mapping.position_of[t]);
      blk.source_indices.push_back(gid);
    }
    if (i + 1 < segments.size())
      blk.bridge = token_swap_sequence(segments[i].mapping,
                                       segments[i + 1].mapping);
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

const std::vector<std::pair<double, double>>& meta_pairs() {
  static const std::vector<std::pair<double, double>> pairs = {
      {0.2, 0.3}, {0.3, 0.4}, {0.4, 0.1}, {0.5, 0.1}, {0.5, 0.6},
      {0.7, 0.1}, {0.8, 0.1}, {0.8, 0.2}, {0.8, 0.6}, {0.9, 0.9}};
  return pairs;
}

RoutedCircuit route_meta(const LogicalProgram& program,
                         std::vector<std::pair<double, double>> pairs,
                         MetaReport* report, bool parallel,
                         std::uint64_t seed) {
  if (pairs.empty()) pairs = meta_pairs();
  const int k = static_cast<int>(pairs.size());

  std::vector<RoutedCircuit> results(k);
  std::vector<double> wall_ms(k, 0.0);
  std::vector<std::string> errors(k);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < k; ++i) {
    RouterConfig cfg;
    cfg.forced_mode = ForcedMode::Fallback;
    cfg.direction = Direction::Forward;
    cfg.alpha = pairs[i].first;
    cfg.beta = pairs[i].second;
    cfg.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    try {
      results[i] = route(program, cfg);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
    wall_ms[i] = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  }

  for (const std::string& e : errors)
    if (!e.empty()) throw std::runtime_error(e);

  int best = 0;
  for (int i = 1; i < k; ++i)
    if (results[i].swap_count() < results[best].swap_count()) best = i;

  if (report) {
    report->per_config.clear();
    for (int i = 0; i < k; ++i)
      report->per_config.push_back({pairs[i].first, pairs[i].second,
                                    results[i].swap_count(), wall_ms[i]});
    report->chosen_index = best;
  }
  return std::move(results[best]);
}

namespace {

// Non-CNOT source gates ride along as carried items: each waits until, on
// every qubit it touches, the number of applied CNOTs reaches the number
// that preceded it in the source, and until it is first in line on each of
// those qubits (which keeps barriers synchronizing).
struct CarriedItems {
  struct Item {
    const Gate* gate;
    std::vector<std::pair<int, int>> needs;  // (qubit, required CNOT count)
  };

  std::vector<Item> items;
  std::vector<std::vector<int>> queue;  // per qubit, item ids in source order
  std::vector<std::size_t> head;
  std::vector<int> total_cnots;  // per qubit, over the whole source

  CarriedItems(const LogicalProgram& src, int m)
      : queue(m), head(m, 0), total_cnots(m, 0) {
    std::vector<int> cnots_before(m, 0);
    for (const Gate& g : src.gates) {
      if (g.kind == Gate::Kind::Cnot) {
        ++cnots_before[g.control()];
        ++cnots_before[g.target()];
        continue;
      }
      Item item{&g, {}};
      std::vector<int> qs = g.qubits;
      std::sort(qs.begin(), qs.end());
      qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
      for (int q : qs) item.needs.emplace_back(q, cnots_before[q]);
      int id = static_cast<int>(items.size());
      items.push_back(std::move(item));
      for (const auto& need : items.back().needs)
        queue[need.first].push_back(id);
    }
    total_cnots = cnots_before;
  }

  // Emits items whose prerequisites are met, lowest source index first,
  // wiring qubits through the current mapping. Items that are last on all
  // their qubits are held for the final flush so that trailing gates and
  // measurements land on the final mapping.
  void flush(const Mapping& cur, const std::vector<int>& applied_count,
             std::vector<Gate>& out, bool final_flush) {
    while (true) {
      int candidate = -1;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        if (head[q] >= queue[q].size()) continue;
        int id = queue[q][head[q]];
        if ((candidate == -1 || id < candidate) &&
            emittable(id, applied_count) && (final_flush || !trailing(id)))
          candidate = id;
      }
      if (candidate == -1) return;
      emit(candidate, cur, out);
    }
  }

  bool trailing(int id) const {
    for (const auto& [q, count] : items[id].needs) {
      if (count < total_cnots[q]) return false;  // a later CNOT follows
      if (queue[q][head[q]] == id && head[q] + 1 < queue[q].size())
        return false;
    }
    return true;
  }

  bool emittable(int id, const std::vector<int>& applied_count) const {
    for (const auto& [q, count] : items[id].needs) {
      if (head[q] >= queue[q].size() || queue[q][head[q]] != id) return false;
      if (applied_count[q] < count) return false;
    }
    return true;
  }

  void emit(int id, const Mapping& cur, std::vector<Gate>& out) {
    const Gate& g = *items[id].gate;
    switch (g.kind) {
      case Gate::Kind::OneQubit:
        out.push_back(
            Gate::one_qubit(g.name, g.params, cur.position_of[g.qubits[0]]));
        break;
      case Gate::Kind::Measure:
        out.push_back(
            Gate::measure(cur.position_of[g.qubits[0]], g.creg, g.cbit));
        break;
      case Gate::Kind::Barrier: {
        std::vector<int> wires;
        wires.reserve(g.qubits.size());
        for (int q : g.qubits) wires.push_back(cur.position_of[q]);
        out.push_back(Gate::barrier(std::move(wires)));
        break;
      }
      default:
        break;
    }
    for (const auto& need : items[id].needs) ++head[need.first];
  }
};

}  // namespace

std::vector<Gate> physical_gates(const RoutedCircuit& routed,
                                 bool decompose_swaps) {
  const int m = routed.num_qubits;
  const std::vector<std::pair<int, int>> cnots = routed.source.cnot_indices();

  CarriedItems carried(routed.source, m);
  std::vector<Gate> out;
  Mapping cur = routed.initial_mapping;
  std::vector<int> applied_count(m, 0);

  for (const CnotBlock& blk : routed.blocks) {
    for (std::size_t k = 0; k < blk.physical_cnots.size(); ++k) {
      carried.flush(cur, applied_count, out, false);
      auto [c, t] = cnots[blk.source_indices[k]];
      out.push_back(
          Gate::cnot(blk.physical_cnots[k].first, blk.physical_cnots[k].second));
      ++applied_count[c];
      ++applied_count[t];
    }
    carried.flush(cur, applied_count, out, false);
    for (const auto& [a, b] : blk.bridge.swaps) {
      if (decompose_swaps) {
        out.push_back(Gate::cnot(a, b));
        out.push_back(Gate::cnot(b, a));
        out.push_back(Gate::cnot(a, b));
      } else {
        out.push_back(Gate::swap(a, b));
      }
      cur.swap_positions(a, b);
    }
  }
  carried.flush(cur, applied_count, out, true);
  return out;
}

namespace {

std::string format_param(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string emit_program(const RoutedCircuit& routed, bool decompose_swaps) {
  const std::string& q = routed.source.register_name;
  std::vector<Gate> gates = physical_gates(routed, decompose_swaps);

  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  bool any_swap = std::any_of(gates.begin(), gates.end(), [](const Gate& g) {
    return g.kind == Gate::Kind::Swap;
  });
  if (any_swap) os << "gate swap a,b { cx a,b; cx b,a; cx a,b; }\n";
  os << "qreg " << q << "[" << routed.num_qubits << "];\n";
  for (const auto& [name, size] : routed.source.cregs)
    os << "creg " << name << "[" << size << "];\n";

  for (const Gate& g : gates) {
    switch (g.kind) {
      case Gate::Kind::OneQubit:
        os << g.name;
        if (!g.params.empty()) {
          os << "(";
          for (std::size_t i = 0; i < g.params.size(); ++i) {
            if (i) os << ",";
            os << format_param(g.params[i]);
          }
          os << ")";
        }
        os << " " << q << "[" << g.qubits[0] << "];\n";
        break;
      case Gate::Kind::Cnot:
        os << "cx " << q << "[" << g.qubits[0] << "]," << q << "["
           << g.qubits[1] << "];\n";
        break;
      case Gate::Kind::Swap:
        os << "swap " << q << "[" << g.qubits[0] << "]," << q << "["
           << g.qubits[1] << "];\n";
        break;
      case Gate::Kind::Measure:
        os << "measure " << q << "[" << g.qubits[0] << "] -> " << g.creg << "["
           << g.cbit << "];\n";
        break;
      case Gate::Kind::Barrier:
        os << "barrier";
        for (std::size_t i = 0; i < g.qubits.size(); ++i)
          os << (i ? "," : " ") << q << "[" << g.qubits[i] << "]";
        os << ";\n";
        break;
    }
  }
  return os.str();
}

}  // namespace qroute

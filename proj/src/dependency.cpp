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

#include "qroute/dependency.hpp"

#include <algorithm>
#include <map>

namespace qroute {

DependencyState DependencyState::build(
    std::vector<std::pair<int, int>> cnots) {
  DependencyState s;
  s.cnots_ = std::move(cnots);
  const int n = static_cast<int>(s.cnots_.size());
  s.alive_.assign(n, 1);
  s.alive_count_ = n;
  s.t_fwd_.assign(n, 0);
  s.t_rev_.assign(n, 0);
  s.recompute();
  return s;
}

std::vector<int> DependencyState::remaining_indices() const {
  std::vector<int> out;
  out.reserve(alive_count_);
  for (int j = 0; j < static_cast<int>(cnots_.size()); ++j)
    if (alive_[j]) out.push_back(j);
  return out;
}

const std::vector<int>& DependencyState::cnots_in_layer(int t) const {
  static const std::vector<int> empty;
  if (t < 0 || t >= static_cast<int>(layer_index_.size())) return empty;
  return layer_index_[t];
}

void DependencyState::apply_cnot(int j) {
  if (front_.find(j) == front_.end()) throw NotInFrontLayer(j);
  alive_[j] = 0;
  --alive_count_;
  front_.erase(j);
  // A front-layer gate has no live predecessor on either of its qubits, so
  // removing it can only unblock, never create, direct blockers.
  for (int succ : blocked_by_[j]) {
    auto& b = blockers_[succ];
    b.erase(std::remove(b.begin(), b.end(), j), b.end());
    if (b.empty() && alive_[succ]) front_.insert(succ);
  }
  blocked_by_[j].clear();
}

void DependencyState::refresh_layers() { recompute(); }

void DependencyState::recompute() {
  const int n = static_cast<int>(cnots_.size());
  blockers_.assign(n, {});
  blocked_by_.assign(n, {});
  front_.clear();
  layer_index_.clear();
  t_max_ = 0;

  // Forward pass: the direct blocker through a qubit is the nearest earlier
  // remaining CNOT touching it.
  std::map<int, int> last_touch;
  for (int j = 0; j < n; ++j) {
    if (!alive_[j]) continue;
    auto [c, t] = cnots_[j];
    int layer = 0;
    for (int q : {c, t}) {
      auto it = last_touch.find(q);
      if (it != last_touch.end()) {
        int i = it->second;
        if (std::find(blockers_[j].begin(), blockers_[j].end(), i) ==
            blockers_[j].end()) {
          blockers_[j].push_back(i);
          blocked_by_[i].push_back(j);
        }
        layer = std::max(layer, t_fwd_[i] + 1);
      }
      last_touch[q] = j;
    }
    t_fwd_[j] = layer;
    t_max_ = std::max(t_max_, layer);
    if (blockers_[j].empty()) front_.insert(j);
    if (layer >= static_cast<int>(layer_index_.size()))
      layer_index_.resize(layer + 1);
    layer_index_[layer].push_back(j);
  }

  // Reverse pass: forward layers of the reversed list.
  std::map<int, int> next_touch;
  for (int j = n - 1; j >= 0; --j) {
    if (!alive_[j]) continue;
    auto [c, t] = cnots_[j];
    int layer = 0;
    for (int q : {c, t}) {
      auto it = next_touch.find(q);
      if (it != next_touch.end()) layer = std::max(layer, t_rev_[it->second] + 1);
      next_touch[q] = j;
    }
    t_rev_[j] = layer;
  }
}

}  // namespace qroute

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

#include <vector>

namespace qroute {

/// Bijection between logical qubits and line positions 0..M-1, stored in
/// both directions.
struct Mapping {
  std::vector<int> position_of;  // logical qubit -> position
  std::vector<int> qubit_at;     // position -> logical qubit

  static Mapping identity(int m);
  static Mapping from_positions(std::vector<int> position_of);

  int size() const { return static_cast<int>(position_of.size()); }
  void swap_positions(int a, int b);
  bool adjacent(int qa, int qb) const;

  bool operator==(const Mapping&) const = default;
};

}  // namespace qroute

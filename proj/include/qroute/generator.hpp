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
#include <string>

#include "qroute/qasm.hpp"

namespace qroute {

/// Deterministic circuit fixtures.
///
///   random    uniform CNOT pairs with sprinkled 1-qubit gates and trailing
///             measurements
///   linear    line-compliant by construction: brick-pattern layers of
///             adjacent-pair CNOTs (even seeds) or an adjacent staircase
///             (odd seeds)
///   chain     a no-commutation staircase; consecutive CNOTs always share a
///             qubit, so the front layer is a single gate throughout
///   triangle  the pairs (0,1), (1,2), (0,2) cycled
LogicalProgram gen_random(int m, int n, std::uint64_t seed);
LogicalProgram gen_linear(int m, int n, std::uint64_t seed);
LogicalProgram gen_chain(int m, int n, std::uint64_t seed);
LogicalProgram gen_triangle(int m = 3, int n = 3, std::uint64_t seed = 0);

/// Dispatch by kind name; throws std::invalid_argument on unknown kinds.
LogicalProgram generate(const std::string& kind, int m, int n,
                        std::uint64_t seed);

}  // namespace qroute

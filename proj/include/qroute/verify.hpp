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

#include <optional>
#include <stdexcept>
#include <string>

#include "qroute/qasm.hpp"
#include "qroute/router.hpp"

namespace qroute {

class TooManyQubits : public std::runtime_error {
 public:
  TooManyQubits(int m, int max)
      : std::runtime_error("unitary check limited to " + std::to_string(max) +
                           " qubits, got " + std::to_string(m)) {}
};

struct VerificationReport {
  bool compliant = false;
  bool equivalent_permutation = false;
  std::optional<bool> equivalent_unitary;
  int swap_count = 0;
  int cnot_count = 0;
  int depth = 0;

  bool ok() const {
    return compliant && equivalent_permutation &&
           equivalent_unitary.value_or(true);
  }
  std::string to_json() const;
};

/// True iff every two-qubit gate of the routed circuit spans line-adjacent
/// positions.
bool check_compliance(const RoutedCircuit& routed);

/// Replays the routed circuit tracking logical tokens through every SWAP,
/// maps each physical CNOT back to its logical pair, and accepts iff that
/// sequence consumes the source CNOT list in some dependency-respecting
/// order and the replayed final mapping matches the recorded one.
bool check_equivalence_permutation(const LogicalProgram& source,
                                   const RoutedCircuit& routed);

/// Dense statevector check: accepts iff U_routed equals the source unitary
/// conjugated by the initial and final relabeling permutations, entrywise
/// within atol. Columns are simulated independently (in parallel when OpenMP
/// is enabled and `parallel` is set). Measurements and barriers are skipped.
bool check_equivalence_unitary(const LogicalProgram& source,
                               const RoutedCircuit& routed, int max_qubits = 10,
                               double atol = 1e-9, bool parallel = true);

/// Greedy layering depth of the physical gate list (barriers synchronize but
/// occupy no layer).
int circuit_depth(const RoutedCircuit& routed);

VerificationReport verify(const LogicalProgram& source,
                          const RoutedCircuit& routed, bool with_unitary,
                          int max_qubits = 10, double atol = 1e-9);

}  // namespace qroute

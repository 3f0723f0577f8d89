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
#include <stdexcept>
#include <vector>

#include "qroute/interaction.hpp"
#include "qroute/mapping.hpp"

namespace qroute {

class ConvergenceFailure : public std::runtime_error {
 public:
  explicit ConvergenceFailure(int iterations)
      : std::runtime_error("eigensolver failed to converge after " +
                           std::to_string(iterations) + " iterations"),
        iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

/// Graph Laplacian L = D - A of an interaction graph: L_ii = sum_k w_ik and
/// L_ij = -w_ij. Symmetric positive semidefinite with null vector 1.
struct Laplacian {
  std::vector<std::vector<double>> m;

  int n() const { return static_cast<int>(m.size()); }
};

Laplacian laplacian(const InteractionGraph& g);

/// Unit-norm eigenvector for the second-smallest eigenvalue of l, orthogonal
/// to the all-ones vector. A uniform regularization weight of 1e-8 between
/// all vertex pairs keeps the vector well-defined on disconnected graphs; on
/// the ones-orthogonal subspace this only shifts the spectrum, leaving the
/// eigenvectors untouched. Requires n >= 2.
std::vector<double> fiedler_vector(const Laplacian& l, double tol = 1e-6);

/// Dense symmetric eigensolve by cyclic Jacobi rotations. Eigenvalues
/// ascending, eigenvectors[i] the eigenvector for eigenvalues[i].
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
};
EigenDecomposition jacobi_eigensolve(const std::vector<std::vector<double>>& a,
                                     int max_sweeps = 100);

/// Places every member qubit of every group on the line so that the order of
/// distinct coordinates is preserved, ties between groups are broken by the
/// seed, fused pairs land on adjacent positions, and the member order inside
/// a pair is seed-determined.
Mapping coordinates_to_mapping(const std::vector<double>& y,
                               const std::vector<VertexGroup>& groups,
                               std::uint64_t seed);

/// Builds the mappings induced by +y and -y and keeps the one whose qubits
/// travel the shortest total distance from prev (ties favor +y). Without a
/// previous mapping the +y mapping is returned.
Mapping choose_orientation(const std::vector<double>& y,
                           const std::optional<Mapping>& prev,
                           const std::vector<VertexGroup>& groups,
                           std::uint64_t seed);

}  // namespace qroute

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

#include "qroute/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <random>

#include "qroute/detail/rng.hpp"
#include "qroute/mapping.hpp"

namespace qroute {

Mapping Mapping::identity(int m) {
  Mapping out;
  out.position_of.resize(m);
  out.qubit_at.resize(m);
  std::iota(out.position_of.begin(), out.position_of.end(), 0);
  std::iota(out.qubit_at.begin(), out.qubit_at.end(), 0);
  return out;
}

Mapping Mapping::from_positions(std::vector<int> position_of) {
  Mapping out;
  out.qubit_at.assign(position_of.size(), -1);
  for (int q = 0; q < static_cast<int>(position_of.size()); ++q)
    out.qubit_at[position_of[q]] = q;
  out.position_of = std::move(position_of);
  return out;
}

void Mapping::swap_positions(int a, int b) {
  std::swap(qubit_at[a], qubit_at[b]);
  position_of[qubit_at[a]] = a;
  position_of[qubit_at[b]] = b;
}

bool Mapping::adjacent(int qa, int qb) const {
  return std::abs(position_of[qa] - position_of[qb]) == 1;
}

Laplacian laplacian(const InteractionGraph& g) {
  const int n = g.num_vertices();
  Laplacian l;
  l.m.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    double degree = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      l.m[i][j] = -g.weight(i, j);
      degree += g.weight(i, j);
    }
    l.m[i][i] = degree;
  }
  return l;
}

EigenDecomposition jacobi_eigensolve(const std::vector<std::vector<double>>& a,
                                     int max_sweeps) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<double>> m = a;
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  double frob2 = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) frob2 += m[p][q] * m[p][q];
  const double threshold = 1e-26 * std::max(frob2, 1e-300);

  int sweeps = 0;
  for (; sweeps < max_sweeps; ++sweeps) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
    if (off <= threshold) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  if (sweeps >= max_sweeps) throw ConvergenceFailure(sweeps);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return m[i][i] < m[j][j]; });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.assign(n, std::vector<double>(n, 0.0));
  for (int r = 0; r < n; ++r) {
    out.eigenvalues[r] = m[order[r]][order[r]];
    for (int k = 0; k < n; ++k) out.eigenvectors[r][k] = v[k][order[r]];
  }
  return out;
}

namespace {

constexpr double kRegularization = 1e-8;
constexpr int kDenseCutoff = 64;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// y := regularized-L * x, where the regularization adds weight eps between
// every vertex pair: (L + eps (nI - J)) x = Lx + eps (n x - sum(x) 1).
std::vector<double> apply_regularized(const Laplacian& l,
                                      const std::vector<double>& x) {
  const int n = l.n();
  std::vector<double> y(n, 0.0);
  double sum = std::accumulate(x.begin(), x.end(), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0;
    for (int j = 0; j < n; ++j) acc += l.m[i][j] * x[j];
    y[i] = acc + kRegularization * (n * x[i] - sum);
  }
  return y;
}

void project_out_ones(std::vector<double>& x) {
  double mean = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  for (double& v : x) v -= mean;
}

double matrix_inf_norm(const Laplacian& l) {
  double best = 0;
  for (const auto& row : l.m) {
    double s = 0;
    for (double v : row) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

// Pick the canonical sign: the largest-magnitude component positive.
void canonicalize_sign(std::vector<double>& y) {
  int k = 0;
  for (int i = 1; i < static_cast<int>(y.size()); ++i)
    if (std::abs(y[i]) > std::abs(y[k])) k = i;
  if (y[k] < 0)
    for (double& v : y) v = -v;
}

std::vector<double> fiedler_dense(const Laplacian& l) {
  const int n = l.n();
  std::vector<std::vector<double>> a = l.m;
  // Regularize so the ones vector is the unique null vector.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[i][j] += (i == j) ? kRegularization * (n - 1) : -kRegularization;

  EigenDecomposition eig = jacobi_eigensolve(a);

  // The ones direction carries the zero eigenvalue; take the smallest
  // eigenvalue among vectors orthogonal to it.
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  int best = -1;
  for (int r = 0; r < n; ++r) {
    double ones_overlap = 0;
    for (double v : eig.eigenvectors[r]) ones_overlap += v * inv_sqrt_n;
    if (std::abs(ones_overlap) > 0.5) continue;
    if (best == -1 || eig.eigenvalues[r] < eig.eigenvalues[best]) best = r;
  }
  assert(best != -1);
  return eig.eigenvectors[best];
}

// Lanczos with full reorthogonalization on the ones-orthogonal subspace.
// Returns the approximate eigenvector for the smallest eigenvalue there, or
// an empty vector when the residual never meets the tolerance.
std::vector<double> fiedler_lanczos(const Laplacian& l, double tol) {
  const int n = l.n();
  const int max_steps = std::min(n - 1, 64);
  const double scale = std::max(matrix_inf_norm(l), 1e-30);

  std::mt19937_64 rng(0x5eedf1ed1e5u);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  for (int restart = 0; restart < 4; ++restart) {
    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;

    std::vector<double> v(n);
    for (double& x : v) x = unit(rng);
    project_out_ones(v);
    double nv = norm(v);
    if (nv < 1e-12) continue;
    for (double& x : v) x /= nv;
    basis.push_back(v);

    for (int step = 0; step < max_steps; ++step) {
      std::vector<double> w = apply_regularized(l, basis.back());
      double a = dot(w, basis.back());
      alpha.push_back(a);
      // Full reorthogonalization keeps the basis clean at these sizes.
      project_out_ones(w);
      for (const auto& b : basis) {
        double c = dot(w, b);
        for (int i = 0; i < n; ++i) w[i] -= c * b[i];
      }
      double nb = norm(w);
      if (nb < 1e-14) break;
      beta.push_back(nb);
      for (double& x : w) x /= nb;
      basis.push_back(std::move(w));
    }

    const int k = static_cast<int>(alpha.size());
    if (k == 0) continue;
    std::vector<std::vector<double>> tri(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i) {
      tri[i][i] = alpha[i];
      if (i + 1 < k) tri[i][i + 1] = tri[i + 1][i] = beta[i];
    }
    EigenDecomposition small = jacobi_eigensolve(tri);

    std::vector<double> y(n, 0.0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j)
        y[j] += small.eigenvectors[0][i] * basis[i][j];
    project_out_ones(y);
    double ny = norm(y);
    if (ny < 1e-12) continue;
    for (double& x : y) x /= ny;

    std::vector<double> ly = apply_regularized(l, y);
    double theta = dot(y, ly);
    double resid = 0;
    for (int i = 0; i < n; ++i) {
      double r = ly[i] - theta * y[i];
      resid += r * r;
    }
    if (std::sqrt(resid) <= tol * scale) return y;
  }
  return {};
}

}  // namespace

std::vector<double> fiedler_vector(const Laplacian& l, double tol) {
  const int n = l.n();
  if (n < 2)
    throw std::invalid_argument("Fiedler vector needs at least two vertices");

  std::vector<double> y;
  if (n <= kDenseCutoff) {
    y = fiedler_dense(l);
  } else {
    y = fiedler_lanczos(l, tol);
    if (y.empty()) y = fiedler_dense(l);
  }

  project_out_ones(y);
  double ny = norm(y);
  if (ny < 1e-12) throw ConvergenceFailure(0);
  for (double& v : y) v /= ny;
  canonicalize_sign(y);
  return y;
}

using detail::splitmix64;

Mapping coordinates_to_mapping(const std::vector<double>& y,
                               const std::vector<VertexGroup>& groups,
                               std::uint64_t seed) {
  assert(y.size() == groups.size());

  // Sort key per member qubit. The coordinate orders distinct groups; the
  // seeded draws only ever break exact ties, first between groups and then
  // between the members of a fused pair. Keeping the group draw ahead of the
  // member draw means fused pairs can never be interleaved by a third qubit.
  struct Key {
    double coord;
    std::uint64_t group_draw;
    int group_index;
    std::uint64_t member_draw;
    int qubit;
  };

  std::vector<Key> keys;
  for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
    std::uint64_t group_draw = splitmix64(seed ^ splitmix64(gi + 1));
    for (std::size_t mi = 0; mi < groups[gi].qubits.size(); ++mi) {
      int q = groups[gi].qubits[mi];
      std::uint64_t member_draw = splitmix64(seed ^ splitmix64(0x10000 + q));
      keys.push_back({y[gi], group_draw, gi, member_draw, q});
    }
  }

  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.coord != b.coord) return a.coord < b.coord;
    if (a.group_draw != b.group_draw) return a.group_draw < b.group_draw;
    if (a.group_index != b.group_index) return a.group_index < b.group_index;
    if (a.member_draw != b.member_draw) return a.member_draw < b.member_draw;
    return a.qubit < b.qubit;
  });

  std::vector<int> position_of(keys.size(), -1);
  for (int pos = 0; pos < static_cast<int>(keys.size()); ++pos)
    position_of[keys[pos].qubit] = pos;
  return Mapping::from_positions(std::move(position_of));
}

Mapping choose_orientation(const std::vector<double>& y,
                           const std::optional<Mapping>& prev,
                           const std::vector<VertexGroup>& groups,
                           std::uint64_t seed) {
  Mapping plus = coordinates_to_mapping(y, groups, seed);
  if (!prev) return plus;

  std::vector<double> neg(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) neg[i] = -y[i];
  Mapping minus = coordinates_to_mapping(neg, groups, seed);

  auto travel = [&](const Mapping& m) {
    long d = 0;
    for (int q = 0; q < m.size(); ++q)
      d += std::abs(m.position_of[q] - prev->position_of[q]);
    return d;
  };
  return travel(minus) < travel(plus) ? minus : plus;
}

}  // namespace qroute

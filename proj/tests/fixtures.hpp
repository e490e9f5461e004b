// ======================================================================== //
// Copyright 2026 The qpset Authors                                         //
//                                                                          //
// Licensed under the Apache License, Version 2.0 (the "License");          //
// you may not use this file except in compliance with the License.         //
// You may obtain a copy of the License at                                  //
//                                                                          //
//     http://www.apache.org/licenses/LICENSE-2.0                           //
//                                                                          //
// Unless required by applicable law or agreed to in writing, software      //
// distributed under the License is distributed on an "AS IS" BASIS,        //
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. //
// See the License for the specific language governing permissions and      //
// limitations under the License.                                           //
// ======================================================================== //

#pragma once

// Shared clusters and test-only reference computations. Nothing here calls
// into strip.cpp or oracle.cpp.

#include "qpset/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace qpset::testing {

inline GroupSpec d8_one_shell(double r = 1.0) {
  return GroupSpec::dihedral(4, {{r, 0.0}});
}

inline GroupSpec d10_two_shell() {
  return GroupSpec::dihedral(5, {{1.0, 0.0}, {0.0, golden_ratio()}});
}

inline GroupSpec d12_one_shell() {
  return GroupSpec::dihedral(6, {{1.0, 0.0}});
}

inline GroupSpec y_icosahedron() {
  return GroupSpec::icosahedral({{1.0, golden_ratio(), 0.0}});
}

inline GroupSpec y_three_shell() {
  const double t = golden_ratio();
  return GroupSpec::icosahedral({{1.0, t, 0.0}, {1.0, 1.0, 1.0}, {1.0, 0.0, 0.0}});
}

/// Leibniz-formula determinant of a square matrix given as rows.
inline double leibniz_det(const std::vector<std::vector<double>> &m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i)
    perm[i] = i;
  double total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    double term = inversions % 2 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i)
      term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// (n+1) x (n+1) matrix with `top` as first row and the chosen cluster
/// vectors as the remaining columns.
inline std::vector<std::vector<double>>
facet_matrix(const std::vector<double> &top, const std::vector<Vec> &reps,
             const std::vector<int> &cols, int n) {
  std::vector<std::vector<double>> m(n + 1, std::vector<double>(n + 1));
  for (int j = 0; j <= n; ++j) {
    m[0][j] = top[j];
    for (int r = 0; r < n; ++r)
      m[r + 1][j] = reps[cols[j]][r];
  }
  return m;
}

/// Half-width by enumerating every +-1/2 first row.
inline double halfwidth_by_enumeration(const std::vector<Vec> &reps,
                                       const std::vector<int> &cols, int n) {
  double best = -1.0;
  for (int mask = 0; mask < (1 << (n + 1)); ++mask) {
    std::vector<double> top(n + 1);
    for (int j = 0; j <= n; ++j)
      top[j] = (mask >> j) & 1 ? 0.5 : -0.5;
    best = std::max(best, leibniz_det(facet_matrix(top, reps, cols, n)));
  }
  return best;
}

inline LatticeVec random_lattice(std::mt19937 &rng, int k, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  LatticeVec x(k);
  for (auto &v : x)
    v = dist(rng);
  return x;
}

inline LatticeVec unit(int k, int j, int sign = 1) {
  LatticeVec x(k, 0);
  x[j] = sign;
  return x;
}

} // namespace qpset::testing

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

#include "qpset/embedding.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qpset {

/// Strictly increasing (n+1)-subset of {0, ..., k-1}; entries past n are
/// unused and zero.
using IndexTuple = std::array<int, 4>;

/// One family of parallel window faces.
///
/// The functional f(x) = sum_j cofactors[j] * x[indices[j]] is the
/// (n+1) x (n+1) determinant with x's selected coordinates in the first row
/// and the selected representatives as the remaining columns, expanded along
/// that first row. The strip is |f(x)| <= halfwidth for every tuple.
struct FacetTuple {
  IndexTuple indices{};
  std::array<double, 4> cofactors{};
  double halfwidth = 0.0;
  bool degenerate = false; ///< rank-deficient column set, f vanishes identically
};

/// All strictly increasing (n+1)-tuples from {0..k-1}, lexicographic.
/// Throws EmptyStrip for k <= n and InvalidArgument for n outside {2, 3}.
std::vector<IndexTuple> index_family(int k, int n);

/// Signed n x n minors of the columns reps[t[0]], ..., reps[t[n]]:
/// c_j = (-1)^j det(columns with column j deleted).
std::array<double, 4> facet_functional(std::span<const Vec> reps,
                                       const IndexTuple &t, int n);
std::array<double, 4> facet_functional(const Cluster &c, const IndexTuple &t);

/// Largest value of the facet determinant over the half-unit sign choices in
/// its first row, which is half the sum of |c_j|.
double halfwidth(std::span<const double> cofactors);

/// Window geometry of a cluster: every facet functional with its half-width,
/// laid out flat and tuple-major for the membership scan.
class StripSpec {
public:
  StripSpec() = default;
  StripSpec(const Cluster &c, const Embedding &e);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<FacetTuple> &tuples() const { return tuples_; }

  /// Threshold for a degenerate tuple, 1e-9 kappa^n.
  double eps_abs() const { return eps_abs_; }
  /// Accepted |f| for tuple t: d (1 + 1e-9), or eps_abs for degenerate tuples.
  double bound(std::size_t t) const { return bound_[t]; }
  /// Boundary tolerance of tuple t.
  double eps_membership(std::size_t t) const;

  double functional(std::size_t t, std::span<const std::int32_t> x) const;

  /// True iff every facet inequality holds. Scans tuples in lexicographic
  /// order and stops at the first violation.
  bool contains(std::span<const std::int32_t> x) const;

  /// Membership of x when x - e_p or x + e_p is known to lie in the strip:
  /// only tuples that involve coordinate p are evaluated. Gives the same
  /// answer as contains(x) under that precondition.
  bool contains_after_step(std::span<const std::int32_t> x, int p) const;

  /// Index of the first violated tuple, if any.
  std::optional<std::size_t>
  first_violation(std::span<const std::int32_t> x) const;

  /// Tuples involving coordinate p, ascending.
  std::span<const std::uint32_t> incident(int p) const { return incident_[p]; }

  std::size_t degenerate_count() const;
  /// Smallest and largest half-width over non-degenerate tuples.
  double min_halfwidth() const;
  double max_halfwidth() const;

private:
  int n_ = 0;
  int k_ = 0;
  double eps_abs_ = 0.0;
  std::vector<FacetTuple> tuples_;
  std::vector<std::int32_t> index_;  // stride 4
  std::vector<double> coef_;         // stride 4, zero-padded for n = 2
  std::vector<double> bound_;
  std::vector<std::vector<std::uint32_t>> incident_;
};

} // namespace qpset

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

#include "qpset/generator.hpp"

#include <span>
#include <vector>

namespace qpset {

/// Covering-cluster check and occupation statistics for a generated set.
///
/// Occupation of a point q is the fraction of the 2k positions q + c,
/// c in {+-v_j}, that are themselves points of the set. This is one reading
/// of "occupation"; the histogram only counts points at least one cluster
/// diameter inside the output radius, where the neighbourhood is complete.
struct CoveringReport {
  /// Per point: occupied cluster positions as signed 1-based indices
  /// (+j for q + v_j, -j for q - v_j).
  std::vector<std::vector<int>> occupied;
  std::vector<double> occupation;
  std::vector<char> interior;
  /// histogram[m] = interior points with exactly m occupied positions.
  std::vector<std::size_t> histogram;

  std::size_t neighbours_checked = 0; ///< in-strip x +- e_i examined
  std::size_t violations = 0;         ///< neighbours not landing on Px +- v_i
  std::size_t off_strip_sources = 0;  ///< points whose own source fails the strip
  double max_deviation = 0.0;

  std::size_t interior_count() const;
  double median_interior_occupation() const;
  double mean_interior_occupation() const;
  bool ok() const { return violations == 0 && off_strip_sources == 0; }
};

CoveringReport covering_check(const QuasiSet &q, const StripSpec &s,
                              const Embedding &e);

/// max over patch points p (|p| <= r_test) of the distance from g p to the
/// nearest point of the set. Requires r_test <= radius - slack; throws
/// InvalidArgument otherwise and EmptyPatch when no point is that close.
double symmetry_defect(const QuasiSet &q, const SquareMatrix &g, double r_test);

/// Smallest distance between two points, via a uniform grid.
/// Throws TooFewPoints for fewer than two points.
double min_pair_distance(const QuasiSet &q);
double min_pair_distance(std::span<const Vec> points);

/// Result of comparing strip membership with the elimination oracle.
struct AgreementReport {
  std::size_t samples = 0;
  std::size_t disagreements = 0;
  /// Disagreements where some facet functional sits within its boundary
  /// tolerance of the half-width.
  std::size_t boundary_disagreements = 0;
  std::size_t inside = 0; ///< samples the strip accepts

  bool ok() const {
    return disagreements == boundary_disagreements &&
           boundary_disagreements * 100 < samples;
  }
};

/// True if some tuple has ||f(x)| - d| within its boundary tolerance.
bool near_boundary(const StripSpec &s, std::span<const std::int32_t> x);

AgreementReport oracle_agreement(const StripSpec &s, const Embedding &e,
                                 std::span<const LatticeVec> samples,
                                 double eps = 1e-9);

/// The set's sources together with all their lattice neighbours; the natural
/// sample for oracle_agreement since it straddles the window boundary.
std::vector<LatticeVec> sources_and_neighbours(const QuasiSet &q);

/// Number of tuples that never reject any neighbour of the set. Purely
/// informational: all inequalities are applied regardless.
std::size_t inactive_tuple_count(const QuasiSet &q, const StripSpec &s);

} // namespace qpset

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

#include "qpset/linalg.hpp"

#include <string>
#include <vector>

namespace qpset {

/// Golden ratio (1 + sqrt 5) / 2.
double golden_ratio();

enum class GroupKind { Dihedral, Icosahedral };

/// A point group in one of its standard real representations plus the seeds
/// of the orbits ("shells") whose union forms the cluster.
///
/// Dihedral(m) is generated by the rotation through pi/m and the mirror
/// (x, y) -> (x, -y) in the plane; Icosahedral by the two rotations of
/// icosahedral_generators() in space.
struct GroupSpec {
  GroupKind kind = GroupKind::Dihedral;
  int m = 0; ///< Dihedral only.
  std::vector<Vec> shells;

  static GroupSpec dihedral(int m, std::vector<Vec> shells);
  static GroupSpec icosahedral(std::vector<Vec> shells);

  /// Physical dimension: 2 for dihedral, 3 for icosahedral.
  int dim() const { return kind == GroupKind::Dihedral ? 2 : 3; }

  /// Human-readable label such as "D2m:5" or "Y".
  std::string label() const;

  /// Checks the shell invariants (dimension, nonzero); throws InvalidGroup.
  void validate() const;
};

struct Generators {
  SquareMatrix a;
  SquareMatrix b;
};

/// Rotation by pi/m and the reflection across the first axis.
/// Throws InvalidGroup for m < 2.
Generators dihedral_generators(int m);

/// The two rotations generating the icosahedral group, with a^5 = b^2 =
/// (ab)^3 = 1.
Generators icosahedral_generators();

Generators generators_for(const GroupSpec &spec);

/// Absolute point-equality tolerance for a group spec: 1e-9 times the
/// largest shell radius.
double dedupe_tolerance(const GroupSpec &spec);

/// Breadth-first closure of {seed} under both generators, deduplicated within
/// dedupe_tolerance(spec). Points are returned in discovery order.
/// Throws NonConvergence if the closure exceeds 10'000 points.
std::vector<Vec> orbit(const GroupSpec &spec, const Vec &seed);

/// An inversion-symmetric G-cluster {+-v_1, ..., +-v_k} stored by its
/// representatives. Each representative is the lexicographically greater
/// member of its antipodal pair; the list is sorted lexicographically.
struct Cluster {
  int n = 0;
  int k = 0;
  std::vector<Vec> reps;
  GroupSpec spec;
  double eps_dedupe = 0.0;
  std::vector<std::string> warnings;

  /// Largest |v_j|.
  double max_radius() const;
  /// Diameter of the full cluster, 2 max |v_j|.
  double diameter() const { return 2.0 * max_radius(); }
  /// All 2k points: v_1..v_k followed by -v_1..-v_k.
  std::vector<Vec> full() const;
};

/// Union of all shell orbits, collapsed to canonical antipodal
/// representatives. Throws AsymmetricCluster when the union is not
/// inversion-symmetric. A shell whose orbit repeats an earlier one is kept
/// once and reported in Cluster::warnings.
Cluster build_cluster(const GroupSpec &spec);

} // namespace qpset

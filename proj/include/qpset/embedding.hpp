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

#include "qpset/cluster.hpp"

#include <span>

namespace qpset {

/// Physical space as an n-dimensional subspace of R^k.
///
/// Row i of `w` collects the i-th coordinate of every representative,
/// w_i = (v_i1, ..., v_ik). For a G-cluster these rows are mutually
/// orthogonal with a common norm kappa; build_embedding() checks both.
class Embedding {
public:
  int n() const { return n_; }
  int k() const { return k_; }
  double kappa() const { return kappa_; }
  double kappa_sq() const { return kappa_ * kappa_; }

  /// Row i as a length-k view.
  std::span<const double> row(int i) const {
    return {w_.data() + static_cast<std::size_t>(i) * k_,
            static_cast<std::size_t>(k_)};
  }
  double w(int i, int j) const { return w_[static_cast<std::size_t>(i) * k_ + j]; }

  /// (<x, w_1>, ..., <x, w_n>): maps e_j onto v_j.
  Vec project_phys(std::span<const double> x) const;
  Vec project_phys(std::span<const std::int32_t> x) const;

  /// Orthogonal projection onto the complement of physical space:
  /// x - sum_i (<x, w_i> / kappa^2) w_i.
  Vec project_perp(std::span<const double> x) const;

  /// Physical-space component pi x, expressed in R^k.
  Vec project_par(std::span<const double> x) const;

private:
  friend Embedding build_embedding(const Cluster &c);

  int n_ = 0;
  int k_ = 0;
  double kappa_ = 0.0;
  std::vector<double> w_; // n x k, row-major
};

/// Assembles w from the cluster and verifies orthogonality and equal norms
/// within 1e-9 kappa^2. Throws NotAGCluster otherwise.
Embedding build_embedding(const Cluster &c);

} // namespace qpset

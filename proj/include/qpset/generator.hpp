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

#include "qpset/error.hpp"
#include "qpset/strip.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qpset {

struct GenerationConfig {
  /// Output radius R in physical space.
  double radius = 0.0;
  /// Extra search margin beyond R; unset means one cluster diameter.
  std::optional<double> slack;
  /// Upper bound on the number of output points.
  std::size_t max_points = 1'000'000;
  /// Worker threads for membership tests; 0 picks hardware concurrency.
  unsigned threads = 0;

  void validate() const;
};

struct QuasiPoint {
  Vec position;
  LatticeVec source;
};

/// Projected strip points inside a ball, sorted by source lattice vector.
struct QuasiSet {
  int n = 0;
  int k = 0;
  std::vector<Vec> cluster; ///< representatives v_1..v_k
  GenerationConfig config;  ///< with slack resolved
  double eps_dedupe = 0.0;  ///< 1e-9 kappa
  std::vector<QuasiPoint> points;
  std::size_t visited = 0;    ///< lattice nodes accepted by the search
  std::size_t tested = 0;     ///< lattice nodes whose membership was decided
  std::size_t collisions = 0; ///< distinct sources with coincident projections
  std::vector<std::string> warnings;

  std::size_t size() const { return points.size(); }
};

/// Raised when more than max_points points fall inside the output radius.
/// Carries everything found up to that point.
class TruncatedError : public Error {
public:
  TruncatedError(const std::string &what, QuasiSet partial)
      : Error(ErrorCode::Truncated, what), partial_(std::move(partial)) {}
  const QuasiSet &partial() const { return partial_; }

private:
  QuasiSet partial_;
};

/// x + e_1, x - e_1, x + e_2, ..., x - e_k.
std::vector<LatticeVec> neighbors(const LatticeVec &x);

/// Breadth-first search of the strip lattice points from the origin.
///
/// A node is expanded when it lies in the strip and its projection is within
/// radius + slack; the output keeps those within radius. Membership of each
/// new node is decided from its parent through the tuples touching the step
/// coordinate.
QuasiSet generate(const Cluster &c, const Embedding &e, const StripSpec &s,
                  const GenerationConfig &cfg);

/// Rebuilds a set from known source vectors (e.g. read back from disk):
/// positions are recomputed and sorting applied; membership is not checked.
QuasiSet from_sources(const Cluster &c, const Embedding &e,
                      const GenerationConfig &cfg,
                      std::vector<LatticeVec> sources);

} // namespace qpset

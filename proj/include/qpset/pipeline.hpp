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

#include "qpset/analysis.hpp"
#include "qpset/config.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qpset {

/// Everything derived from a run configuration before any lattice search.
struct Pipeline {
  RunConfig config;
  Cluster cluster;
  Embedding embedding;
  StripSpec strip;

  static Pipeline build(RunConfig cfg);

  QuasiSet generate() const;
};

struct FacetSummary {
  std::size_t tuples = 0;
  double d_min = 0.0;
  double d_max = 0.0;
  std::size_t degenerate = 0;
};

FacetSummary facet_summary(const StripSpec &s);

/// `key = value` lines describing the window facets.
std::string facets_report(const Pipeline &p);

struct ValidationResult {
  CoveringReport covering;
  std::optional<AgreementReport> agreement;
  /// (generator name, defect); empty when the interior patch is empty.
  std::vector<std::pair<std::string, double>> symmetry;
  double symmetry_tolerance = 0.0;
  double symmetry_radius = 0.0;
  double min_distance = 0.0;
  std::size_t inactive_tuples = 0;
  bool passed = false;

  /// `key = value` report lines.
  std::string text(const Pipeline &p, const QuasiSet &q) const;
};

/// Covering check, patch symmetry under the group generators and inversion
/// (tolerance 1e-6 kappa), and optionally oracle agreement on every source
/// and its neighbours.
ValidationResult validate(const Pipeline &p, const QuasiSet &q,
                          bool with_oracle);

} // namespace qpset

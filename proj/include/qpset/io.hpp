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

#include "qpset/config.hpp"
#include "qpset/generator.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qpset {

/// Shortest round-trippable decimal form, "%.17g".
std::string format_real(double v);

/// Columns `x,y[,z],occupation,src`; src is the source lattice vector with
/// `;` between components. `occupation` must have one entry per point.
void write_csv(std::ostream &os, const QuasiSet &q,
               std::span<const double> occupation);

struct CsvRow {
  Vec position;
  double occupation = 0.0;
  LatticeVec source;
};

/// Reads what write_csv wrote. Throws Io on malformed input.
std::vector<CsvRow> read_csv(std::istream &is);

/// One filled circle per point (radius 0.15 x nearest-neighbour distance)
/// in a fitted viewBox; y points up. Two-dimensional sets only.
void write_svg(std::ostream &os, const QuasiSet &q);

/// `x y z` per line, no header. Three-dimensional sets only.
void write_xyz(std::ostream &os, const QuasiSet &q);

void write_points(std::ostream &os, OutputFormat format, const QuasiSet &q,
                  std::span<const double> occupation);

} // namespace qpset

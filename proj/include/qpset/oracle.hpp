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

// Slow reference decision for window membership. Nothing here touches the
// facet functionals in strip.hpp; the two paths are compared in the tests.

#include "qpset/embedding.hpp"

#include <array>
#include <span>
#include <vector>

namespace qpset::oracle {

/// a . alpha <= b over the physical coordinates alpha (n <= 3).
struct Inequality {
  std::array<double, 3> a{};
  double b = 0.0;
};

/// The 2k inequalities -1/2 - eps <= x_j - sum_i alpha_i w_ij <= 1/2 + eps.
/// Feasible iff x - (some point of physical space) lies in the widened unit
/// cube, i.e. iff the perpendicular part of x lies in the window.
std::vector<Inequality> feasibility_system(const Embedding &e,
                                           std::span<const double> x,
                                           double eps);

/// Fourier-Motzkin elimination over all n unknowns.
bool feasible(std::vector<Inequality> system, int n);

bool window_contains(const Embedding &e, std::span<const double> x,
                     double eps = 1e-9);
bool window_contains(const Embedding &e, std::span<const std::int32_t> x,
                     double eps = 1e-9);

} // namespace qpset::oracle

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

#include "qpset/embedding.hpp"
#include "qpset/error.hpp"

#include <cmath>
#include <sstream>

namespace qpset {

namespace {

void check_length(std::size_t got, int want, const char *what) {
  if (got != static_cast<std::size_t>(want))
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected a vector of length " +
                    std::to_string(want) + ", got " + std::to_string(got));
}

} // namespace

Embedding build_embedding(const Cluster &c) {
  if (c.n < 1 || c.k < 1 || c.reps.size() != static_cast<std::size_t>(c.k))
    throw Error(ErrorCode::NotAGCluster, "cluster is empty or malformed");

  Embedding e;
  e.n_ = c.n;
  e.k_ = c.k;
  e.w_.assign(static_cast<std::size_t>(c.n) * c.k, 0.0);
  for (int j = 0; j < c.k; ++j) {
    check_length(c.reps[j].size(), c.n, "build_embedding");
    for (int i = 0; i < c.n; ++i)
      e.w_[static_cast<std::size_t>(i) * c.k + j] = c.reps[j][i];
  }

  const double kappa_sq = dot(e.row(0), e.row(0));
  if (!(kappa_sq > 0.0))
    throw Error(ErrorCode::NotAGCluster, "first coordinate row vanishes");
  const double tol = 1e-9 * kappa_sq;
  for (int i = 0; i < c.n; ++i)
    for (int j = i; j < c.n; ++j) {
      const double g = dot(e.row(i), e.row(j));
      const double want = i == j ? kappa_sq : 0.0;
      if (std::abs(g - want) > tol) {
        std::ostringstream msg;
        msg << "coordinate rows are not orthogonal with equal norms: <w" << i + 1
            << ",w" << j + 1 << "> = " << g << ", expected " << want
            << " (not a full union of group orbits?)";
        throw Error(ErrorCode::NotAGCluster, msg.str());
      }
    }
  e.kappa_ = std::sqrt(kappa_sq);
  return e;
}

Vec Embedding::project_phys(std::span<const double> x) const {
  check_length(x.size(), k_, "project_phys");
  Vec p(n_);
  for (int i = 0; i < n_; ++i)
    p[i] = dot(x, row(i));
  return p;
}

Vec Embedding::project_phys(std::span<const std::int32_t> x) const {
  check_length(x.size(), k_, "project_phys");
  Vec p(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    const auto r = row(i);
    double s = 0.0;
    for (int j = 0; j < k_; ++j)
      s += r[j] * x[j];
    p[i] = s;
  }
  return p;
}

Vec Embedding::project_par(std::span<const double> x) const {
  const Vec p = project_phys(x);
  Vec y(k_, 0.0);
  for (int i = 0; i < n_; ++i) {
    const double coef = p[i] / kappa_sq();
    const auto r = row(i);
    for (int j = 0; j < k_; ++j)
      y[j] += coef * r[j];
  }
  return y;
}

Vec Embedding::project_perp(std::span<const double> x) const {
  Vec y = project_par(x);
  for (int j = 0; j < k_; ++j)
    y[j] = x[j] - y[j];
  return y;
}

} // namespace qpset

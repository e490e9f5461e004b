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

#include "qpset/strip.hpp"
#include "qpset/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qpset {

std::vector<IndexTuple> index_family(int k, int n) {
  if (n != 2 && n != 3)
    throw Error(ErrorCode::InvalidArgument,
                "index_family: physical dimension must be 2 or 3");
  if (k <= n)
    throw Error(ErrorCode::EmptyStrip,
                "index_family: need k > n (k = " + std::to_string(k) +
                    ", n = " + std::to_string(n) + ")");
  const int width = n + 1;
  std::vector<IndexTuple> out;
  IndexTuple t{};
  for (int j = 0; j < width; ++j)
    t[j] = j;
  while (true) {
    out.push_back(t);
    int j = width - 1;
    while (j >= 0 && t[j] == k - width + j)
      --j;
    if (j < 0)
      break;
    ++t[j];
    for (int l = j + 1; l < width; ++l)
      t[l] = t[l - 1] + 1;
  }
  return out;
}

std::array<double, 4> facet_functional(std::span<const Vec> reps,
                                       const IndexTuple &t, int n) {
  std::array<double, 4> c{};
  for (int j = 0; j <= n; ++j) {
    SquareMatrix minor(n);
    int col = 0;
    for (int l = 0; l <= n; ++l) {
      if (l == j)
        continue;
      const Vec &v = reps[static_cast<std::size_t>(t[l])];
      for (int r = 0; r < n; ++r)
        minor(r, col) = v[r];
      ++col;
    }
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    c[j] = sign * minor.determinant();
  }
  return c;
}

std::array<double, 4> facet_functional(const Cluster &c, const IndexTuple &t) {
  return facet_functional(c.reps, t, c.n);
}

double halfwidth(std::span<const double> cofactors) {
  double s = 0.0;
  for (double c : cofactors)
    s += std::abs(c);
  return 0.5 * s;
}

StripSpec::StripSpec(const Cluster &c, const Embedding &e)
    : n_(c.n), k_(c.k), eps_abs_(1e-9 * std::pow(e.kappa(), c.n)) {
  const auto family = index_family(c.k, c.n);
  const int width = n_ + 1;
  tuples_.reserve(family.size());
  index_.assign(family.size() * 4, 0);
  coef_.assign(family.size() * 4, 0.0);
  bound_.resize(family.size());
  incident_.assign(static_cast<std::size_t>(k_), {});

  for (std::size_t t = 0; t < family.size(); ++t) {
    FacetTuple ft;
    ft.indices = family[t];
    ft.cofactors = facet_functional(c, ft.indices);
    ft.halfwidth =
        halfwidth(std::span<const double>(ft.cofactors.data(), width));
    ft.degenerate = ft.halfwidth <= eps_abs_;
    bound_[t] = ft.degenerate ? eps_abs_ : ft.halfwidth * (1.0 + 1e-9);
    for (int j = 0; j < width; ++j) {
      index_[t * 4 + j] = ft.indices[j];
      coef_[t * 4 + j] = ft.cofactors[j];
      incident_[ft.indices[j]].push_back(static_cast<std::uint32_t>(t));
    }
    tuples_.push_back(ft);
  }
}

double StripSpec::eps_membership(std::size_t t) const {
  return tuples_[t].degenerate ? eps_abs_ : 1e-9 * tuples_[t].halfwidth;
}

double StripSpec::functional(std::size_t t,
                             std::span<const std::int32_t> x) const {
  const std::int32_t *idx = &index_[t * 4];
  const double *c = &coef_[t * 4];
  double f = c[0] * x[idx[0]] + c[1] * x[idx[1]] + c[2] * x[idx[2]];
  if (n_ == 3)
    f += c[3] * x[idx[3]];
  return f;
}

bool StripSpec::contains(std::span<const std::int32_t> x) const {
  return !first_violation(x).has_value();
}

std::optional<std::size_t>
StripSpec::first_violation(std::span<const std::int32_t> x) const {
  if (x.size() != static_cast<std::size_t>(k_))
    throw Error(ErrorCode::DimensionMismatch,
                "strip membership: lattice vector has wrong length");
  const std::size_t count = tuples_.size();
  for (std::size_t t = 0; t < count; ++t)
    if (std::abs(functional(t, x)) > bound_[t])
      return t;
  return std::nullopt;
}

bool StripSpec::contains_after_step(std::span<const std::int32_t> x,
                                    int p) const {
  if (x.size() != static_cast<std::size_t>(k_) || p < 0 || p >= k_)
    throw Error(ErrorCode::DimensionMismatch,
                "strip membership: lattice vector or step index out of range");
  for (std::uint32_t t : incident_[p])
    if (std::abs(functional(t, x)) > bound_[t])
      return false;
  return true;
}

std::size_t StripSpec::degenerate_count() const {
  return static_cast<std::size_t>(std::count_if(
      tuples_.begin(), tuples_.end(),
      [](const FacetTuple &t) { return t.degenerate; }));
}

double StripSpec::min_halfwidth() const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto &t : tuples_)
    if (!t.degenerate)
      d = std::min(d, t.halfwidth);
  return d;
}

double StripSpec::max_halfwidth() const {
  double d = 0.0;
  for (const auto &t : tuples_)
    d = std::max(d, t.halfwidth);
  return d;
}

} // namespace qpset

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

#include "qpset/spatial_hash.hpp"
#include "qpset/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace qpset {

std::size_t SpatialHash::KeyHash::operator()(const Key &k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : k) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SpatialHash::SpatialHash(int n, double cell) : n_(n), cell_(cell) {
  if (n < 1 || n > 3 || !(cell > 0.0))
    throw Error(ErrorCode::InvalidArgument,
                "SpatialHash: need dimension 1..3 and a positive cell size");
}

SpatialHash::Key SpatialHash::key_of(std::span<const double> p) const {
  Key k{};
  for (int i = 0; i < n_; ++i)
    k[i] = static_cast<std::int64_t>(std::floor(p[i] / cell_));
  return k;
}

std::size_t SpatialHash::insert(std::span<const double> p) {
  if (p.size() != static_cast<std::size_t>(n_))
    throw Error(ErrorCode::DimensionMismatch, "SpatialHash: wrong dimension");
  std::array<double, 3> q{};
  std::copy(p.begin(), p.end(), q.begin());
  const std::size_t id = points_.size();
  points_.push_back(q);
  const Key k = key_of(p);
  if (id == 0) {
    lo_ = hi_ = k;
  } else {
    for (int i = 0; i < n_; ++i) {
      lo_[i] = std::min(lo_[i], k[i]);
      hi_[i] = std::max(hi_[i], k[i]);
    }
  }
  cells_[k].push_back(id);
  return id;
}

// Calls f(id) for every point in cells at Chebyshev distance `ring`.
template <class F>
void SpatialHash::visit_shell(const Key &centre, int ring, F &&f) const {
  Key off{};
  const int span = 2 * ring + 1;
  const int total = n_ == 1 ? span : (n_ == 2 ? span * span : span * span * span);
  for (int idx = 0; idx < total; ++idx) {
    int rest = idx, cheb = 0;
    for (int i = 0; i < n_; ++i) {
      off[i] = rest % span - ring;
      rest /= span;
      cheb = std::max(cheb, std::abs(static_cast<int>(off[i])));
    }
    if (cheb != ring)
      continue;
    Key k{};
    for (int i = 0; i < n_; ++i)
      k[i] = centre[i] + off[i];
    const auto it = cells_.find(k);
    if (it == cells_.end())
      continue;
    for (std::size_t id : it->second)
      f(id);
  }
}

std::optional<std::size_t> SpatialHash::find(std::span<const double> p,
                                             double tol) const {
  const Key centre = key_of(p);
  std::optional<std::size_t> hit;
  for (int ring = 0; ring <= 1 && !hit; ++ring)
    visit_shell(centre, ring, [&](std::size_t id) {
      if (!hit && distance(p, point(id)) <= tol)
        hit = id;
    });
  return hit;
}

std::optional<std::pair<std::size_t, double>>
SpatialHash::nearest(std::span<const double> p,
                     std::optional<std::size_t> exclude) const {
  if (points_.empty())
    return std::nullopt;
  const Key centre = key_of(p);
  // Past this ring every occupied cell has been seen.
  std::int64_t max_ring = 0;
  for (int i = 0; i < n_; ++i)
    max_ring = std::max({max_ring, std::abs(centre[i] - lo_[i]),
                         std::abs(hi_[i] - centre[i])});

  std::optional<std::pair<std::size_t, double>> best;
  for (std::int64_t ring = 0; ring <= max_ring; ++ring) {
    visit_shell(centre, static_cast<int>(ring), [&](std::size_t id) {
      if (exclude && *exclude == id)
        return;
      const double d = distance(p, point(id));
      if (!best || d < best->second || (d == best->second && id < best->first))
        best = std::make_pair(id, d);
    });
    // Cells within `ring` cover the ball of radius ring * cell around p.
    if (best && best->second <= static_cast<double>(ring) * cell_)
      break;
  }
  return best;
}

} // namespace qpset

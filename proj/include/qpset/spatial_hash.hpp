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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace qpset {

/// Uniform grid over 2D or 3D points with point and nearest-neighbour
/// queries.
class SpatialHash {
public:
  SpatialHash(int n, double cell);

  double cell() const { return cell_; }
  std::size_t size() const { return points_.size(); }
  std::span<const double> point(std::size_t id) const {
    return {points_[id].data(), static_cast<std::size_t>(n_)};
  }

  /// Stores p and returns its id (insertion index).
  std::size_t insert(std::span<const double> p);

  /// Some stored point within tol of p; requires tol <= cell.
  std::optional<std::size_t> find(std::span<const double> p, double tol) const;

  /// Closest stored point to p (optionally skipping one id), with its
  /// distance. Empty if the hash holds no eligible point.
  std::optional<std::pair<std::size_t, double>>
  nearest(std::span<const double> p,
          std::optional<std::size_t> exclude = std::nullopt) const;

private:
  using Key = std::array<std::int64_t, 3>;
  struct KeyHash {
    std::size_t operator()(const Key &k) const noexcept;
  };

  Key key_of(std::span<const double> p) const;
  template <class F> void visit_shell(const Key &centre, int ring, F &&f) const;

  int n_;
  double cell_;
  std::vector<std::array<double, 3>> points_;
  std::unordered_map<Key, std::vector<std::size_t>, KeyHash> cells_;
  Key lo_{}, hi_{};
};

} // namespace qpset

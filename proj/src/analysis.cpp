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

#include "qpset/analysis.hpp"
#include "qpset/oracle.hpp"
#include "qpset/spatial_hash.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qpset {

namespace {

double cluster_radius(const QuasiSet &q) {
  double r = 0.0;
  for (const auto &v : q.cluster)
    r = std::max(r, norm(v));
  return r;
}

SpatialHash index_points(const QuasiSet &q, double cell) {
  SpatialHash h(q.n, cell);
  for (const auto &p : q.points)
    h.insert(p.position);
  return h;
}

} // namespace

std::size_t CoveringReport::interior_count() const {
  return static_cast<std::size_t>(std::count(interior.begin(), interior.end(), 1));
}

double CoveringReport::median_interior_occupation() const {
  std::vector<double> vals;
  for (std::size_t i = 0; i < occupation.size(); ++i)
    if (interior[i])
      vals.push_back(occupation[i]);
  if (vals.empty())
    return 0.0;
  std::sort(vals.begin(), vals.end());
  const std::size_t mid = vals.size() / 2;
  return vals.size() % 2 ? vals[mid] : 0.5 * (vals[mid - 1] + vals[mid]);
}

double CoveringReport::mean_interior_occupation() const {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < occupation.size(); ++i)
    if (interior[i]) {
      sum += occupation[i];
      ++count;
    }
  return count ? sum / static_cast<double>(count) : 0.0;
}

CoveringReport covering_check(const QuasiSet &q, const StripSpec &s,
                              const Embedding &e) {
  CoveringReport r;
  const std::size_t count = q.points.size();
  const int k = q.k;
  r.occupied.resize(count);
  r.occupation.assign(count, 0.0);
  r.interior.assign(count, 0);
  r.histogram.assign(static_cast<std::size_t>(2 * k + 1), 0);
  if (count == 0)
    return r;

  const double tol = 1e-12 * e.kappa();
  const double inner = q.config.radius - 2.0 * cluster_radius(q);
  const SpatialHash placed =
      index_points(q, std::max(0.25 * cluster_radius(q), 4.0 * q.eps_dedupe));

  for (std::size_t idx = 0; idx < count; ++idx) {
    const auto &pt = q.points[idx];
    const bool source_ok = s.contains(pt.source);
    if (!source_ok)
      ++r.off_strip_sources;

    LatticeVec y = pt.source;
    Vec expect(q.n);
    for (int j = 0; j < k; ++j) {
      for (int dir : {1, -1}) {
        y[j] += dir;
        const bool in_strip =
            source_ok ? s.contains_after_step(y, j) : s.contains(y);
        if (in_strip) {
          ++r.neighbours_checked;
          const Vec image = e.project_phys(y);
          for (int i = 0; i < q.n; ++i)
            expect[i] = pt.position[i] + dir * q.cluster[j][i];
          const double dev = distance(image, expect);
          r.max_deviation = std::max(r.max_deviation, dev);
          if (dev > tol)
            ++r.violations;
        }
        y[j] -= dir;

        for (int i = 0; i < q.n; ++i)
          expect[i] = pt.position[i] + dir * q.cluster[j][i];
        if (placed.find(expect, q.eps_dedupe))
          r.occupied[idx].push_back(dir * (j + 1));
      }
    }
    r.occupation[idx] = static_cast<double>(r.occupied[idx].size()) /
                        static_cast<double>(2 * k);
    if (norm(pt.position) <= inner) {
      r.interior[idx] = 1;
      ++r.histogram[r.occupied[idx].size()];
    }
  }
  return r;
}

double symmetry_defect(const QuasiSet &q, const SquareMatrix &g,
                       double r_test) {
  const double limit = q.config.radius - q.config.slack.value_or(0.0);
  if (!(r_test <= limit))
    throw Error(ErrorCode::InvalidArgument,
                "symmetry_defect: test radius exceeds radius - slack");
  if (g.dim() != q.n)
    throw Error(ErrorCode::DimensionMismatch,
                "symmetry_defect: matrix dimension differs from the set's");
  const SpatialHash placed =
      index_points(q, std::max(0.25 * cluster_radius(q), 4.0 * q.eps_dedupe));

  double worst = 0.0;
  std::size_t patch = 0;
  for (const auto &pt : q.points) {
    if (norm(pt.position) > r_test)
      continue;
    ++patch;
    const Vec image = g.apply(pt.position);
    const auto hit = placed.nearest(image);
    worst = std::max(worst, hit->second);
  }
  if (patch == 0)
    throw Error(ErrorCode::EmptyPatch,
                "symmetry_defect: no points within the test radius");
  return worst;
}

double min_pair_distance(std::span<const Vec> points) {
  if (points.size() < 2)
    throw Error(ErrorCode::TooFewPoints,
                "min_pair_distance needs at least two points");
  const int n = static_cast<int>(points.front().size());
  // Cell edge from the mean spacing over the bounding box.
  double volume = 1.0;
  for (int i = 0; i < n; ++i) {
    double lo = points.front()[i], hi = lo;
    for (const auto &p : points) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    volume *= std::max(hi - lo, 1e-12);
  }
  const double cell =
      std::pow(volume / static_cast<double>(points.size()), 1.0 / n);
  SpatialHash h(n, cell);
  for (const auto &p : points)
    h.insert(p);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
    best = std::min(best, h.nearest(points[i], i)->second);
  return best;
}

double min_pair_distance(const QuasiSet &q) {
  std::vector<Vec> pts;
  pts.reserve(q.points.size());
  for (const auto &p : q.points)
    pts.push_back(p.position);
  return min_pair_distance(pts);
}

bool near_boundary(const StripSpec &s, std::span<const std::int32_t> x) {
  for (std::size_t t = 0; t < s.size(); ++t) {
    const double d = s.tuples()[t].degenerate ? 0.0 : s.tuples()[t].halfwidth;
    if (std::abs(std::abs(s.functional(t, x)) - d) <= s.eps_membership(t))
      return true;
  }
  return false;
}

AgreementReport oracle_agreement(const StripSpec &s, const Embedding &e,
                                 std::span<const LatticeVec> samples,
                                 double eps) {
  AgreementReport r;
  for (const auto &x : samples) {
    ++r.samples;
    const bool fast = s.contains(x);
    if (fast)
      ++r.inside;
    if (fast == oracle::window_contains(e, x, eps))
      continue;
    ++r.disagreements;
    if (near_boundary(s, x))
      ++r.boundary_disagreements;
  }
  return r;
}

std::vector<LatticeVec> sources_and_neighbours(const QuasiSet &q) {
  std::set<LatticeVec> all;
  for (const auto &p : q.points) {
    all.insert(p.source);
    for (auto &y : neighbors(p.source))
      all.insert(std::move(y));
  }
  return {all.begin(), all.end()};
}

std::size_t inactive_tuple_count(const QuasiSet &q, const StripSpec &s) {
  std::vector<char> active(s.size(), 0);
  for (const auto &p : q.points)
    for (const auto &y : neighbors(p.source))
      for (std::size_t t = 0; t < s.size(); ++t)
        if (std::abs(s.functional(t, y)) > s.bound(t))
          active[t] = 1;
  return static_cast<std::size_t>(std::count(active.begin(), active.end(), 0));
}

} // namespace qpset

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

#include "qpset/cluster.hpp"
#include "qpset/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

namespace qpset {

namespace {

constexpr std::size_t kOrbitLimit = 10'000;

bool contains_point(const std::vector<Vec> &set, const Vec &p, double eps) {
  return std::any_of(set.begin(), set.end(),
                     [&](const Vec &q) { return distance(p, q) <= eps; });
}

Vec negated(const Vec &v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = -v[i];
  return r;
}

// -1, 0, +1 with coordinates closer than eps treated as equal.
int tolerant_compare(const Vec &a, const Vec &b, double eps) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - eps)
      return -1;
    if (a[i] > b[i] + eps)
      return 1;
  }
  return 0;
}

} // namespace

double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

GroupSpec GroupSpec::dihedral(int m, std::vector<Vec> shells) {
  GroupSpec s;
  s.kind = GroupKind::Dihedral;
  s.m = m;
  s.shells = std::move(shells);
  return s;
}

GroupSpec GroupSpec::icosahedral(std::vector<Vec> shells) {
  GroupSpec s;
  s.kind = GroupKind::Icosahedral;
  s.shells = std::move(shells);
  return s;
}

std::string GroupSpec::label() const {
  if (kind == GroupKind::Icosahedral)
    return "Y";
  return "D2m:" + std::to_string(m);
}

void GroupSpec::validate() const {
  if (kind == GroupKind::Dihedral && m < 2)
    throw Error(ErrorCode::InvalidGroup,
                "dihedral group needs m >= 2, got m = " + std::to_string(m));
  const auto n = static_cast<std::size_t>(dim());
  for (std::size_t i = 0; i < shells.size(); ++i) {
    if (shells[i].size() != n)
      throw Error(ErrorCode::InvalidGroup,
                  "shell " + std::to_string(i + 1) + " has " +
                      std::to_string(shells[i].size()) + " components, " +
                      label() + " needs " + std::to_string(n));
    if (norm(shells[i]) == 0.0)
      throw Error(ErrorCode::InvalidGroup,
                  "shell " + std::to_string(i + 1) + " is the zero vector");
  }
}

Generators dihedral_generators(int m) {
  if (m < 2)
    throw Error(ErrorCode::InvalidGroup,
                "dihedral group needs m >= 2, got m = " + std::to_string(m));
  const double angle = std::numbers::pi / m;
  const double c = std::cos(angle), s = std::sin(angle);
  return {SquareMatrix(2, {c, -s, s, c}), SquareMatrix(2, {1.0, 0.0, 0.0, -1.0})};
}

Generators icosahedral_generators() {
  const double t = golden_ratio();
  const double p = (t - 1.0) / 2.0, q = t / 2.0;
  SquareMatrix a(3, {p, -q, 0.5,   //
                     q, 0.5, p,    //
                     -0.5, p, q});
  SquareMatrix b(3, {-1.0, 0.0, 0.0, //
                     0.0, -1.0, 0.0, //
                     0.0, 0.0, 1.0});
  return {a, b};
}

Generators generators_for(const GroupSpec &spec) {
  return spec.kind == GroupKind::Dihedral ? dihedral_generators(spec.m)
                                          : icosahedral_generators();
}

double dedupe_tolerance(const GroupSpec &spec) {
  double r = 0.0;
  for (const auto &s : spec.shells)
    r = std::max(r, norm(s));
  return 1e-9 * r;
}

std::vector<Vec> orbit(const GroupSpec &spec, const Vec &seed) {
  if (seed.size() != static_cast<std::size_t>(spec.dim()))
    throw Error(ErrorCode::DimensionMismatch, "orbit: seed has wrong dimension");
  if (norm(seed) == 0.0)
    throw Error(ErrorCode::InvalidGroup, "orbit: seed is the zero vector");
  const Generators gens = generators_for(spec);
  const double eps = std::max(dedupe_tolerance(spec), 1e-9 * norm(seed));

  std::vector<Vec> points{seed};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const Vec p = points[queue.front()];
    queue.pop_front();
    for (const SquareMatrix *g : {&gens.a, &gens.b}) {
      Vec image = g->apply(p);
      if (contains_point(points, image, eps))
        continue;
      if (points.size() >= kOrbitLimit)
        throw Error(ErrorCode::NonConvergence,
                    "orbit closure exceeded " + std::to_string(kOrbitLimit) +
                        " points");
      points.push_back(std::move(image));
      queue.push_back(points.size() - 1);
    }
  }
  return points;
}

double Cluster::max_radius() const {
  double r = 0.0;
  for (const auto &v : reps)
    r = std::max(r, norm(v));
  return r;
}

std::vector<Vec> Cluster::full() const {
  std::vector<Vec> all = reps;
  for (const auto &v : reps)
    all.push_back(negated(v));
  return all;
}

Cluster build_cluster(const GroupSpec &spec) {
  spec.validate();
  if (spec.shells.empty())
    throw Error(ErrorCode::InvalidGroup, "cluster needs at least one shell");

  Cluster c;
  c.n = spec.dim();
  c.spec = spec;
  c.eps_dedupe = dedupe_tolerance(spec);
  const double eps = c.eps_dedupe;

  std::vector<Vec> all;
  for (std::size_t i = 0; i < spec.shells.size(); ++i) {
    const auto shell = orbit(spec, spec.shells[i]);
    // Distinct orbits are disjoint, so one shared point means a repeat.
    if (contains_point(all, shell.front(), eps)) {
      c.warnings.push_back("duplicate shell " + std::to_string(i + 1) +
                           ": orbit already present, kept once");
      continue;
    }
    all.insert(all.end(), shell.begin(), shell.end());
  }

  // Exact zeros (and no negative zeros) keep representatives reproducible.
  for (auto &p : all)
    for (auto &x : p)
      if (std::abs(x) <= eps)
        x = 0.0;

  for (const auto &p : all)
    if (!contains_point(all, negated(p), eps))
      throw Error(ErrorCode::AsymmetricCluster,
                  "cluster is not symmetric under inversion");

  for (const auto &p : all)
    if (tolerant_compare(p, negated(p), eps) > 0)
      c.reps.push_back(p);
  if (2 * c.reps.size() != all.size())
    throw Error(ErrorCode::AsymmetricCluster,
                "cluster points do not pair up into antipodal pairs");

  std::sort(c.reps.begin(), c.reps.end(), [eps](const Vec &a, const Vec &b) {
    return tolerant_compare(a, b, eps) < 0;
  });
  c.k = static_cast<int>(c.reps.size());
  return c;
}

} // namespace qpset

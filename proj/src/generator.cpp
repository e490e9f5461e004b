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

#include "qpset/generator.hpp"
#include "qpset/spatial_hash.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_set>

namespace qpset {

namespace {

struct LatticeHash {
  std::size_t operator()(const LatticeVec &x) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : x) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct Candidate {
  LatticeVec x;
  int step; // coordinate changed from the parent
};

// Fills accept[i] for every candidate, splitting the work across threads.
// Each slot is written by exactly one worker.
template <class Pred>
void evaluate(const std::vector<Candidate> &cands, std::vector<char> &accept,
              unsigned threads, Pred &&pred) {
  accept.assign(cands.size(), 0);
  const std::size_t count = cands.size();
  if (threads <= 1 || count < 256) {
    for (std::size_t i = 0; i < count; ++i)
      accept[i] = pred(cands[i]) ? 1 : 0;
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi)
      break;
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i)
        accept[i] = pred(cands[i]) ? 1 : 0;
    });
  }
  for (auto &th : pool)
    th.join();
}

void sort_by_source(std::vector<QuasiPoint> &pts) {
  std::sort(pts.begin(), pts.end(), [](const QuasiPoint &a, const QuasiPoint &b) {
    return a.source < b.source;
  });
}

QuasiSet empty_set(const Cluster &c, const Embedding &e,
                   const GenerationConfig &cfg) {
  cfg.validate();
  QuasiSet q;
  q.n = c.n;
  q.k = c.k;
  q.cluster = c.reps;
  q.config = cfg;
  q.config.slack = cfg.slack.value_or(c.diameter());
  q.eps_dedupe = 1e-9 * e.kappa();
  return q;
}

} // namespace

void GenerationConfig::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw Error(ErrorCode::InvalidArgument, "generation radius must be > 0");
  if (slack && (!(*slack >= 0.0) || !std::isfinite(*slack)))
    throw Error(ErrorCode::InvalidArgument, "generation slack must be >= 0");
  if (max_points < 1)
    throw Error(ErrorCode::InvalidArgument, "max_points must be >= 1");
}

std::vector<LatticeVec> neighbors(const LatticeVec &x) {
  std::vector<LatticeVec> out;
  out.reserve(2 * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    LatticeVec up = x, down = x;
    ++up[i];
    --down[i];
    out.push_back(std::move(up));
    out.push_back(std::move(down));
  }
  return out;
}

QuasiSet generate(const Cluster &c, const Embedding &e, const StripSpec &s,
                  const GenerationConfig &cfg) {
  QuasiSet q = empty_set(c, e, cfg);
  if (s.k() != c.k || e.k() != c.k)
    throw Error(ErrorCode::DimensionMismatch,
                "generate: cluster, embedding and strip disagree on k");
  const double radius = cfg.radius;
  const double reach = radius + *q.config.slack;
  const unsigned threads =
      cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());

  SpatialHash placed(c.n, std::max(0.25 * c.max_radius(), 4.0 * q.eps_dedupe));
  std::vector<QuasiPoint> out;
  auto emit = [&](const LatticeVec &x, const Vec &p) {
    if (norm(p) > radius)
      return;
    if (placed.find(p, q.eps_dedupe)) {
      ++q.collisions;
      return;
    }
    placed.insert(p);
    out.push_back({p, x});
    if (out.size() > cfg.max_points) {
      out.pop_back();
      sort_by_source(out);
      q.points = std::move(out);
      throw TruncatedError("more than " + std::to_string(cfg.max_points) +
                               " points within radius; output truncated",
                           std::move(q));
    }
  };

  std::unordered_set<LatticeVec, LatticeHash> accepted;
  LatticeVec origin(static_cast<std::size_t>(c.k), 0);
  ++q.tested;
  if (!s.contains(origin))
    throw Error(ErrorCode::EmptyStrip, "origin is outside the strip");
  accepted.insert(origin);
  emit(origin, e.project_phys(origin));

  std::vector<LatticeVec> frontier{origin};
  std::vector<Candidate> cands;
  std::vector<char> accept;
  bool first_level = true;
  while (!frontier.empty()) {
    cands.clear();
    for (const auto &x : frontier)
      for (int p = 0; p < c.k; ++p)
        for (int dir : {1, -1}) {
          LatticeVec y = x;
          y[p] += dir;
          if (!accepted.count(y))
            cands.push_back({std::move(y), p});
        }

    evaluate(cands, accept, threads, [&](const Candidate &cand) {
      return s.contains_after_step(cand.x, cand.step) &&
             norm(e.project_phys(cand.x)) <= reach;
    });
    q.tested += cands.size();

    // Merge the level in lexicographic order; decides which source wins a
    // projection collision.
    std::vector<LatticeVec> next;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (accept[i])
        next.push_back(std::move(cands[i].x));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (const auto &x : next) {
      accepted.insert(x);
      emit(x, e.project_phys(x));
    }
    if (first_level && next.empty())
      q.warnings.push_back(
          "empty beyond origin: no neighbour of the origin lies in the strip");
    first_level = false;
    frontier = std::move(next);
  }

  q.visited = accepted.size();
  if (q.collisions)
    q.warnings.push_back(std::to_string(q.collisions) +
                         " lattice points projected onto an existing point");
  sort_by_source(out);
  q.points = std::move(out);
  return q;
}

QuasiSet from_sources(const Cluster &c, const Embedding &e,
                      const GenerationConfig &cfg,
                      std::vector<LatticeVec> sources) {
  QuasiSet q = empty_set(c, e, cfg);
  q.points.reserve(sources.size());
  for (auto &x : sources) {
    if (x.size() != static_cast<std::size_t>(c.k))
      throw Error(ErrorCode::DimensionMismatch,
                  "source lattice vector has wrong length");
    Vec p = e.project_phys(x);
    q.points.push_back({std::move(p), std::move(x)});
  }
  sort_by_source(q.points);
  q.visited = q.points.size();
  return q;
}

} // namespace qpset

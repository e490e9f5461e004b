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

#include "doctest.h"
#include "fixtures.hpp"

#include "qpset/generator.hpp"
#include "qpset/oracle.hpp"

#include <map>
#include <set>

using namespace qpset;
using namespace qpset::testing;

namespace {

struct Setup {
  Cluster cluster;
  Embedding embedding;
  StripSpec strip;

  explicit Setup(const GroupSpec &spec)
      : cluster(build_cluster(spec)), embedding(build_embedding(cluster)),
        strip(cluster, embedding) {}

  QuasiSet run(double radius, unsigned threads = 1) const {
    GenerationConfig cfg;
    cfg.radius = radius;
    cfg.threads = threads;
    return generate(cluster, embedding, strip, cfg);
  }
};

std::set<LatticeVec> sources(const QuasiSet &q) {
  std::set<LatticeVec> out;
  for (const auto &p : q.points)
    out.insert(p.source);
  return out;
}

bool has_point(const QuasiSet &q, const Vec &p) {
  for (const auto &pt : q.points)
    if (distance(pt.position, p) <= 1e-9)
      return true;
  return false;
}

} // namespace

TEST_CASE("neighbors order") {
  const auto nb = neighbors({0, 5});
  REQUIRE(nb.size() == 4);
  CHECK(nb[0] == LatticeVec{1, 5});
  CHECK(nb[1] == LatticeVec{-1, 5});
  CHECK(nb[2] == LatticeVec{0, 6});
  CHECK(nb[3] == LatticeVec{0, 4});
}

TEST_CASE("generation config validation") {
  GenerationConfig cfg;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.radius = 2.0;
  CHECK_NOTHROW(cfg.validate());
  cfg.slack = -1.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.slack = 0.0;
  cfg.max_points = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("origin and cluster points are generated") {
  const Setup s(d8_one_shell());
  const QuasiSet q = s.run(3.0);
  CHECK(q.config.slack.value() == doctest::Approx(2.0));
  CHECK(has_point(q, {0.0, 0.0}));
  for (const auto &v : s.cluster.full())
    CHECK(has_point(q, v));
  for (const auto &p : q.points)
    CHECK(norm(p.position) <= 3.0);
}

TEST_CASE("generated sets are centrally symmetric") {
  for (const auto &spec : {d8_one_shell(), d10_two_shell(), y_icosahedron()}) {
    const Setup s(spec);
    const QuasiSet q = s.run(4.0);
    const auto src = sources(q);
    for (const auto &x : src) {
      LatticeVec neg = x;
      for (auto &v : neg)
        v = -v;
      CHECK(src.count(neg) == 1);
    }
  }
}

TEST_CASE("every source lies in the strip and projects onto its point") {
  const Setup s(d10_two_shell());
  const QuasiSet q = s.run(6.0);
  CHECK(q.size() > 50);
  for (const auto &p : q.points) {
    CHECK(s.strip.contains(p.source));
    const Vec img = s.embedding.project_phys(p.source);
    CHECK(distance(img, p.position) == 0.0);
  }
}

TEST_CASE("output is sorted by source and free of duplicates") {
  const Setup s(y_three_shell());
  const QuasiSet q = s.run(4.0);
  for (std::size_t i = 1; i < q.size(); ++i)
    CHECK(q.points[i - 1].source < q.points[i].source);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      CHECK(distance(q.points[i].position, q.points[j].position) > q.eps_dedupe);
}

TEST_CASE("generation is deterministic and independent of thread count") {
  const Setup s(d10_two_shell());
  const QuasiSet a = s.run(8.0, 1);
  const QuasiSet b = s.run(8.0, 1);
  const QuasiSet c = s.run(8.0, 4);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.points[i].source == b.points[i].source);
    CHECK(a.points[i].source == c.points[i].source);
    CHECK(a.points[i].position == c.points[i].position);
  }
}

TEST_CASE("larger radius gives a superset") {
  const Setup s(d8_one_shell());
  const auto small = sources(s.run(3.0));
  const auto large = sources(s.run(5.0));
  CHECK(small.size() < large.size());
  CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
}

TEST_CASE("D8 search finds every strip point of a brute-force box") {
  const Setup s(d8_one_shell());
  const double radius = 4.0;
  const QuasiSet q = s.run(radius);
  std::set<LatticeVec> want;
  LatticeVec x(4);
  const int b = 6;
  for (x[0] = -b; x[0] <= b; ++x[0])
    for (x[1] = -b; x[1] <= b; ++x[1])
      for (x[2] = -b; x[2] <= b; ++x[2])
        for (x[3] = -b; x[3] <= b; ++x[3])
          if (oracle::window_contains(s.embedding, std::span<const std::int32_t>(x)) &&
              norm(s.embedding.project_phys(std::span<const std::int32_t>(x))) <= radius)
            want.insert(x);
  // No accepted point touches the edge of the box.
  for (const auto &y : want)
    for (int v : y)
      CHECK(std::abs(v) < b);
  CHECK(sources(q) == want);
}

TEST_CASE("point count regression values") {
  CHECK(Setup(d8_one_shell()).run(6.0).size() == 145);
  CHECK(Setup(d10_two_shell()).run(6.0).size() == 71);
}

TEST_CASE("truncation keeps the partial set") {
  const Setup s(d8_one_shell());
  GenerationConfig cfg;
  cfg.radius = 6.0;
  cfg.max_points = 20;
  try {
    generate(s.cluster, s.embedding, s.strip, cfg);
    FAIL("expected truncation");
  } catch (const TruncatedError &e) {
    CHECK(e.code() == ErrorCode::Truncated);
    CHECK(e.partial().size() == 20);
    for (const auto &p : e.partial().points)
      CHECK(s.strip.contains(p.source));
  }
}

TEST_CASE("collisions in the three-shell icosahedral set are merged") {
  const Setup s(y_three_shell());
  const QuasiSet q = s.run(6.0);
  CHECK(q.size() == 303);
  CHECK(q.collisions > 0);
  CHECK_FALSE(q.warnings.empty());
}

TEST_CASE("from_sources projects and sorts") {
  const Setup s(d8_one_shell());
  GenerationConfig cfg;
  cfg.radius = 1.0;
  const QuasiSet q =
      from_sources(s.cluster, s.embedding, cfg, {{0, 0, 0, 1}, {0, 0, 0, 0}});
  REQUIRE(q.size() == 2);
  CHECK(q.points[0].source == LatticeVec{0, 0, 0, 0});
  CHECK(q.points[1].position == s.cluster.reps[3]);
  CHECK_THROWS_AS(from_sources(s.cluster, s.embedding, cfg, {{0, 0}}), Error);
}

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

// Exercises the shared library through qpset.h only.

#include "doctest.h"

#include "qpset/qpset.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

const char *kD8 = "group = D2m:4\nshell = 1, 0\nradius = 6\n";
const char *kD10 = "group = D2m:5\nshell = 1, 0\nshell = 0, tau\nradius = 6\n";

struct Handle {
  qpset_pipeline *p = nullptr;
  explicit Handle(const char *text) {
    REQUIRE(qpset_pipeline_from_text(text, &p) == QPSET_OK);
  }
  ~Handle() { qpset_pipeline_free(p); }
};

struct Points {
  qpset_pointset *s = nullptr;
  ~Points() { qpset_pointset_free(s); }
};

std::filesystem::path temp_file(const std::string &name) {
  return std::filesystem::temp_directory_path() / ("qpset_capi_" + name);
}

std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(qpset_version()) == "1.0.0");
  CHECK(std::string(qpset_status_string(QPSET_OK)) == "ok");
  CHECK(std::string(qpset_status_string(QPSET_ERR_CONFIG)).size() > 0);
  CHECK(std::string(qpset_status_string(static_cast<qpset_status>(1234))).size() > 0);
}

TEST_CASE("pipeline properties") {
  Handle h(kD10);
  CHECK(qpset_pipeline_dim(h.p) == 2);
  CHECK(qpset_pipeline_k(h.p) == 10);
  CHECK(qpset_pipeline_kappa(h.p) > 0.0);
  CHECK(std::string(qpset_pipeline_output(h.p)).empty());
  CHECK(qpset_pipeline_set_output(h.p, "x.csv") == QPSET_OK);
  CHECK(std::string(qpset_pipeline_output(h.p)) == "x.csv");
  CHECK(qpset_pipeline_set_format(h.p, "svg") == QPSET_OK);
  CHECK(qpset_pipeline_set_format(h.p, "xyz") == QPSET_ERR_CONFIG);
  CHECK(qpset_pipeline_set_format(h.p, "png") == QPSET_ERR_CONFIG);
  CHECK(qpset_pipeline_set_threads(h.p, 2) == QPSET_OK);
}

TEST_CASE("facet summary") {
  Handle h(kD10);
  qpset_facet_summary f{};
  REQUIRE(qpset_facets(h.p, &f) == QPSET_OK);
  CHECK(f.tuples == 120);
  CHECK(f.degenerate == 0);
  CHECK(f.d_min > 0.0);
  CHECK(f.d_max >= f.d_min);

  qpset_report *r = nullptr;
  REQUIRE(qpset_facets_report(h.p, &r) == QPSET_OK);
  const std::string text = qpset_report_text(r);
  CHECK(text.find("tuples = 120\n") != std::string::npos);
  CHECK(text.find("k = 10\n") != std::string::npos);
  qpset_report_free(r);
}

TEST_CASE("membership queries") {
  Handle h(kD8);
  const int32_t zero[4] = {0, 0, 0, 0};
  const int32_t far[4] = {3, 0, 0, 0};
  int in = -1;
  REQUIRE(qpset_strip_contains(h.p, zero, &in) == QPSET_OK);
  CHECK(in == 1);
  REQUIRE(qpset_strip_contains(h.p, far, &in) == QPSET_OK);
  CHECK(in == 0);
  REQUIRE(qpset_oracle_contains(h.p, zero, 1e-9, &in) == QPSET_OK);
  CHECK(in == 1);
  REQUIRE(qpset_oracle_contains(h.p, far, 1e-9, &in) == QPSET_OK);
  CHECK(in == 0);
  CHECK(qpset_strip_contains(h.p, nullptr, &in) == QPSET_ERR_INVALID_ARGUMENT);
  CHECK(qpset_oracle_contains(h.p, zero, -1.0, &in) == QPSET_ERR_INVALID_ARGUMENT);
}

TEST_CASE("generate, inspect and validate") {
  Handle h(kD8);
  Points pts;
  REQUIRE(qpset_generate(h.p, &pts.s) == QPSET_OK);
  CHECK(qpset_pointset_size(pts.s) == 145);

  double xy[2];
  int32_t src[4];
  bool origin = false;
  for (size_t i = 0; i < qpset_pointset_size(pts.s); ++i) {
    REQUIRE(qpset_pointset_position(pts.s, i, xy) == QPSET_OK);
    REQUIRE(qpset_pointset_source(pts.s, i, src) == QPSET_OK);
    CHECK(std::hypot(xy[0], xy[1]) <= 6.0);
    origin |= src[0] == 0 && src[1] == 0 && src[2] == 0 && src[3] == 0;
  }
  CHECK(origin);
  CHECK(qpset_pointset_position(pts.s, 145, xy) == QPSET_ERR_INVALID_ARGUMENT);
  CHECK(qpset_pointset_source(pts.s, 999, src) == QPSET_ERR_INVALID_ARGUMENT);

  int passed = 0;
  qpset_report *r = nullptr;
  REQUIRE(qpset_validate(h.p, pts.s, 1, &passed, &r) == QPSET_OK);
  CHECK(passed == 1);
  const std::string text = qpset_report_text(r);
  CHECK(text.find("violations = 0\n") != std::string::npos);
  CHECK(text.find("status = PASS\n") != std::string::npos);
  qpset_report_free(r);
}

TEST_CASE("write and read back CSV") {
  Handle h(kD10);
  Points a;
  REQUIRE(qpset_generate(h.p, &a.s) == QPSET_OK);
  const auto path = temp_file("roundtrip.csv");
  REQUIRE(qpset_write(h.p, a.s, path.string().c_str()) == QPSET_OK);

  Points b;
  REQUIRE(qpset_pointset_read_csv(h.p, path.string().c_str(), &b.s) == QPSET_OK);
  REQUIRE(qpset_pointset_size(b.s) == qpset_pointset_size(a.s));
  for (size_t i = 0; i < qpset_pointset_size(a.s); ++i) {
    double pa[2], pb[2];
    qpset_pointset_position(a.s, i, pa);
    qpset_pointset_position(b.s, i, pb);
    CHECK(pa[0] == pb[0]);
    CHECK(pa[1] == pb[1]);
  }

  // A second write is byte-identical.
  const auto again = temp_file("roundtrip2.csv");
  REQUIRE(qpset_write(h.p, b.s, again.string().c_str()) == QPSET_OK);
  CHECK(slurp(path) == slurp(again));

  int passed = 0;
  REQUIRE(qpset_validate(h.p, b.s, 0, &passed, nullptr) == QPSET_OK);
  CHECK(passed == 1);
  std::filesystem::remove(path);
  std::filesystem::remove(again);
}

TEST_CASE("CSV from another cluster is rejected") {
  Handle d8(kD8), d10(kD10);
  Points pts;
  REQUIRE(qpset_generate(d8.p, &pts.s) == QPSET_OK);
  const auto path = temp_file("d8.csv");
  REQUIRE(qpset_write(d8.p, pts.s, path.string().c_str()) == QPSET_OK);
  Points other;
  CHECK(qpset_pointset_read_csv(d10.p, path.string().c_str(), &other.s) != QPSET_OK);
  CHECK(other.s == nullptr);
  CHECK(std::string(qpset_last_error()).size() > 0);
  CHECK(qpset_pointset_read_csv(d8.p, "/nonexistent.csv", &other.s) == QPSET_ERR_IO);
  std::filesystem::remove(path);
}

TEST_CASE("truncation returns the partial set") {
  Handle h("group = D2m:4\nshell = 1, 0\nradius = 6\nmax_points = 10\n");
  Points pts;
  CHECK(qpset_generate(h.p, &pts.s) == QPSET_ERR_TRUNCATED);
  REQUIRE(pts.s != nullptr);
  CHECK(qpset_pointset_size(pts.s) == 10);
}

TEST_CASE("bench") {
  Handle h(kD8);
  qpset_bench_result r{};
  REQUIRE(qpset_bench(h.p, &r) == QPSET_OK);
  CHECK(r.points == 145);
  CHECK(r.seconds >= 0.0);
}

TEST_CASE("configuration errors map to status codes") {
  qpset_pipeline *p = nullptr;
  CHECK(qpset_pipeline_from_text("group = D2m:4\nshell = 1, 0\n", &p) == QPSET_ERR_CONFIG);
  CHECK(p == nullptr);
  CHECK(std::string(qpset_last_error()).find("radius") != std::string::npos);
  CHECK(qpset_pipeline_from_text("group = D2m:4\nbogus = 1\n", &p) ==
        QPSET_ERR_CONFIG_SYNTAX);
  CHECK(qpset_pipeline_from_text("group = Y\nshell = 1, 0.3, 0.7\nradius = 2\n", &p) ==
        QPSET_ERR_ASYMMETRIC_CLUSTER);
  CHECK(qpset_pipeline_from_text("group = D2m:4\nshell = 0, 0\nradius = 2\n", &p) ==
        QPSET_ERR_INVALID_GROUP);
  CHECK(qpset_pipeline_from_file("/nonexistent.cfg", &p) == QPSET_ERR_IO);
  CHECK(qpset_pipeline_from_text(nullptr, &p) == QPSET_ERR_INVALID_ARGUMENT);
  CHECK(qpset_pipeline_from_text(kD8, nullptr) == QPSET_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null handles") {
  CHECK(qpset_generate(nullptr, nullptr) == QPSET_ERR_INVALID_ARGUMENT);
  CHECK(qpset_facets(nullptr, nullptr) == QPSET_ERR_INVALID_ARGUMENT);
  CHECK(qpset_pointset_size(nullptr) == 0);
  qpset_pipeline_free(nullptr);
  qpset_pointset_free(nullptr);
  qpset_report_free(nullptr);
}

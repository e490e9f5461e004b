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

#include "qpset/qpset.h"

#include "qpset/io.hpp"
#include "qpset/oracle.hpp"
#include "qpset/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <new>
#include <span>
#include <sstream>
#include <string>

struct qpset_pipeline {
  qpset::Pipeline impl;
};

struct qpset_pointset {
  qpset::QuasiSet impl;
};

struct qpset_report {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

qpset_status map_code(qpset::ErrorCode code) {
  using qpset::ErrorCode;
  switch (code) {
  case ErrorCode::InvalidArgument:
    return QPSET_ERR_INVALID_ARGUMENT;
  case ErrorCode::InvalidGroup:
    return QPSET_ERR_INVALID_GROUP;
  case ErrorCode::NonConvergence:
    return QPSET_ERR_NON_CONVERGENCE;
  case ErrorCode::AsymmetricCluster:
    return QPSET_ERR_ASYMMETRIC_CLUSTER;
  case ErrorCode::NotAGCluster:
    return QPSET_ERR_NOT_A_G_CLUSTER;
  case ErrorCode::EmptyStrip:
    return QPSET_ERR_EMPTY_STRIP;
  case ErrorCode::DimensionMismatch:
    return QPSET_ERR_DIMENSION;
  case ErrorCode::Truncated:
    return QPSET_ERR_TRUNCATED;
  case ErrorCode::ConfigSyntax:
    return QPSET_ERR_CONFIG_SYNTAX;
  case ErrorCode::ConfigSemantic:
    return QPSET_ERR_CONFIG;
  case ErrorCode::Io:
    return QPSET_ERR_IO;
  case ErrorCode::EmptyPatch:
    return QPSET_ERR_EMPTY_PATCH;
  case ErrorCode::TooFewPoints:
    return QPSET_ERR_TOO_FEW_POINTS;
  }
  return QPSET_ERR_INTERNAL;
}

qpset_status fail(qpset_status status, std::string msg) {
  g_last_error = std::move(msg);
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F> qpset_status guarded(F &&f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const qpset::Error &ex) {
    return fail(map_code(ex.code()), ex.what());
  } catch (const std::bad_alloc &) {
    return fail(QPSET_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &ex) {
    return fail(QPSET_ERR_INTERNAL, ex.what());
  } catch (...) {
    return fail(QPSET_ERR_INTERNAL, "unknown exception");
  }
}

qpset_status null_argument(const char *fn) {
  return fail(QPSET_ERR_INVALID_ARGUMENT, std::string(fn) + ": null argument");
}

qpset_status make_pipeline(qpset::RunConfig cfg, qpset_pipeline **out) {
  auto p = std::make_unique<qpset_pipeline>();
  p->impl = qpset::Pipeline::build(std::move(cfg));
  *out = p.release();
  return QPSET_OK;
}

} // namespace

extern "C" {

const char *qpset_version(void) { return "1.0.0"; }

const char *qpset_last_error(void) { return g_last_error.c_str(); }

const char *qpset_status_string(qpset_status status) {
  switch (status) {
  case QPSET_OK:
    return "ok";
  case QPSET_ERR_INVALID_ARGUMENT:
    return "invalid argument";
  case QPSET_ERR_INVALID_GROUP:
    return "invalid group";
  case QPSET_ERR_NON_CONVERGENCE:
    return "orbit did not converge";
  case QPSET_ERR_ASYMMETRIC_CLUSTER:
    return "asymmetric cluster";
  case QPSET_ERR_NOT_A_G_CLUSTER:
    return "not a G-cluster";
  case QPSET_ERR_EMPTY_STRIP:
    return "empty strip";
  case QPSET_ERR_DIMENSION:
    return "dimension mismatch";
  case QPSET_ERR_TRUNCATED:
    return "output truncated";
  case QPSET_ERR_CONFIG_SYNTAX:
    return "config syntax error";
  case QPSET_ERR_CONFIG:
    return "config error";
  case QPSET_ERR_IO:
    return "i/o error";
  case QPSET_ERR_EMPTY_PATCH:
    return "empty patch";
  case QPSET_ERR_TOO_FEW_POINTS:
    return "too few points";
  case QPSET_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

qpset_status qpset_pipeline_from_text(const char *config_text,
                                      qpset_pipeline **out) {
  if (!config_text || !out)
    return null_argument("qpset_pipeline_from_text");
  *out = nullptr;
  return guarded(
      [&] { return make_pipeline(qpset::parse_config(config_text), out); });
}

qpset_status qpset_pipeline_from_file(const char *config_path,
                                      qpset_pipeline **out) {
  if (!config_path || !out)
    return null_argument("qpset_pipeline_from_file");
  *out = nullptr;
  return guarded(
      [&] { return make_pipeline(qpset::load_config(config_path), out); });
}

void qpset_pipeline_free(qpset_pipeline *p) { delete p; }

int qpset_pipeline_dim(const qpset_pipeline *p) { return p ? p->impl.cluster.n : 0; }

int qpset_pipeline_k(const qpset_pipeline *p) { return p ? p->impl.cluster.k : 0; }

double qpset_pipeline_kappa(const qpset_pipeline *p) {
  return p ? p->impl.embedding.kappa() : 0.0;
}

const char *qpset_pipeline_output(const qpset_pipeline *p) {
  return p ? p->impl.config.out.c_str() : "";
}

qpset_status qpset_pipeline_set_output(qpset_pipeline *p, const char *path) {
  if (!p || !path)
    return null_argument("qpset_pipeline_set_output");
  p->impl.config.out = path;
  return QPSET_OK;
}

qpset_status qpset_pipeline_set_format(qpset_pipeline *p, const char *format) {
  if (!p || !format)
    return null_argument("qpset_pipeline_set_format");
  return guarded([&] {
    const auto f = qpset::parse_format(format);
    const int n = p->impl.cluster.n;
    if ((f == qpset::OutputFormat::Svg && n != 2) ||
        (f == qpset::OutputFormat::Xyz && n != 3))
      return fail(QPSET_ERR_CONFIG, std::string("format '") + format +
                                        "' does not fit a " +
                                        std::to_string(n) + "D point set");
    p->impl.config.format = f;
    return QPSET_OK;
  });
}

qpset_status qpset_pipeline_set_threads(qpset_pipeline *p, unsigned threads) {
  if (!p)
    return null_argument("qpset_pipeline_set_threads");
  p->impl.config.threads = threads;
  return QPSET_OK;
}

qpset_status qpset_facets(const qpset_pipeline *p, qpset_facet_summary *out) {
  if (!p || !out)
    return null_argument("qpset_facets");
  return guarded([&] {
    const auto f = qpset::facet_summary(p->impl.strip);
    out->tuples = f.tuples;
    out->d_min = f.d_min;
    out->d_max = f.d_max;
    out->degenerate = f.degenerate;
    return QPSET_OK;
  });
}

qpset_status qpset_facets_report(const qpset_pipeline *p, qpset_report **out) {
  if (!p || !out)
    return null_argument("qpset_facets_report");
  *out = nullptr;
  return guarded([&] {
    *out = new qpset_report{qpset::facets_report(p->impl)};
    return QPSET_OK;
  });
}

qpset_status qpset_strip_contains(const qpset_pipeline *p, const int32_t *x,
                                  int *inside) {
  if (!p || !x || !inside)
    return null_argument("qpset_strip_contains");
  return guarded([&] {
    const std::span<const int32_t> v(x, static_cast<std::size_t>(p->impl.cluster.k));
    *inside = p->impl.strip.contains(v) ? 1 : 0;
    return QPSET_OK;
  });
}

qpset_status qpset_oracle_contains(const qpset_pipeline *p, const int32_t *x,
                                   double eps, int *inside) {
  if (!p || !x || !inside)
    return null_argument("qpset_oracle_contains");
  if (!(eps >= 0.0) || !std::isfinite(eps))
    return fail(QPSET_ERR_INVALID_ARGUMENT,
                "qpset_oracle_contains: eps must be finite and >= 0");
  return guarded([&] {
    const std::span<const int32_t> v(x, static_cast<std::size_t>(p->impl.cluster.k));
    *inside = qpset::oracle::window_contains(p->impl.embedding, v, eps) ? 1 : 0;
    return QPSET_OK;
  });
}

qpset_status qpset_generate(const qpset_pipeline *p, qpset_pointset **out) {
  if (!p || !out)
    return null_argument("qpset_generate");
  *out = nullptr;
  return guarded([&] {
    try {
      *out = new qpset_pointset{p->impl.generate()};
      return QPSET_OK;
    } catch (const qpset::TruncatedError &ex) {
      *out = new qpset_pointset{ex.partial()};
      return fail(QPSET_ERR_TRUNCATED, ex.what());
    }
  });
}

qpset_status qpset_pointset_read_csv(const qpset_pipeline *p, const char *path,
                                     qpset_pointset **out) {
  if (!p || !path || !out)
    return null_argument("qpset_pointset_read_csv");
  *out = nullptr;
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      return fail(QPSET_ERR_IO, std::string("cannot open '") + path + "'");
    const auto rows = qpset::read_csv(in);
    std::vector<qpset::LatticeVec> sources;
    sources.reserve(rows.size());
    for (const auto &r : rows)
      sources.push_back(r.source);
    auto set = qpset::from_sources(p->impl.cluster, p->impl.embedding,
                                   p->impl.config.generation(), std::move(sources));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto &recomputed = set.points[i].position;
      // rows and set are both in source order when the file came from us
      if (rows[i].source != set.points[i].source)
        break;
      if (qpset::distance(recomputed, rows[i].position) > 1e-9 * p->impl.embedding.kappa())
        return fail(QPSET_ERR_IO, std::string("'") + path +
                                      "': stored coordinates do not match the "
                                      "source lattice vectors for this config");
    }
    *out = new qpset_pointset{std::move(set)};
    return QPSET_OK;
  });
}

void qpset_pointset_free(qpset_pointset *s) { delete s; }

size_t qpset_pointset_size(const qpset_pointset *s) {
  return s ? s->impl.points.size() : 0;
}

qpset_status qpset_pointset_position(const qpset_pointset *s, size_t i,
                                     double *xyz) {
  if (!s || !xyz)
    return null_argument("qpset_pointset_position");
  if (i >= s->impl.points.size())
    return fail(QPSET_ERR_INVALID_ARGUMENT, "point index out of range");
  const auto &pos = s->impl.points[i].position;
  std::copy(pos.begin(), pos.end(), xyz);
  return QPSET_OK;
}

qpset_status qpset_pointset_source(const qpset_pointset *s, size_t i,
                                   int32_t *x) {
  if (!s || !x)
    return null_argument("qpset_pointset_source");
  if (i >= s->impl.points.size())
    return fail(QPSET_ERR_INVALID_ARGUMENT, "point index out of range");
  const auto &src = s->impl.points[i].source;
  std::copy(src.begin(), src.end(), x);
  return QPSET_OK;
}

qpset_status qpset_write(const qpset_pipeline *p, const qpset_pointset *s,
                         const char *path) {
  if (!p || !s)
    return null_argument("qpset_write");
  return guarded([&] {
    const auto &q = s->impl;
    std::vector<double> occupation;
    if (p->impl.config.format == qpset::OutputFormat::Csv)
      occupation = qpset::covering_check(q, p->impl.strip, p->impl.embedding).occupation;

    std::string target = (path && *path) ? path : p->impl.config.out;
    if (target.empty() || target == "-") {
      qpset::write_points(std::cout, p->impl.config.format, q, occupation);
      std::cout.flush();
      return std::cout ? QPSET_OK : fail(QPSET_ERR_IO, "write to stdout failed");
    }
    std::ofstream os(target, std::ios::binary | std::ios::trunc);
    if (!os)
      return fail(QPSET_ERR_IO, "cannot open '" + target + "' for writing");
    qpset::write_points(os, p->impl.config.format, q, occupation);
    os.close();
    if (!os)
      return fail(QPSET_ERR_IO, "write to '" + target + "' failed");
    return QPSET_OK;
  });
}

qpset_status qpset_validate(const qpset_pipeline *p, const qpset_pointset *s,
                            int with_oracle, int *passed, qpset_report **out) {
  if (!p || !s || !passed)
    return null_argument("qpset_validate");
  if (out)
    *out = nullptr;
  return guarded([&] {
    const auto result = qpset::validate(p->impl, s->impl, with_oracle != 0);
    *passed = result.passed ? 1 : 0;
    if (out) {
      std::string text;
      for (const auto &w : p->impl.cluster.warnings)
        text += "warning = " + w + '\n';
      text += result.text(p->impl, s->impl);
      *out = new qpset_report{std::move(text)};
    }
    return QPSET_OK;
  });
}

qpset_status qpset_bench(const qpset_pipeline *p, qpset_bench_result *out) {
  if (!p || !out)
    return null_argument("qpset_bench");
  return guarded([&] {
    const auto start = std::chrono::steady_clock::now();
    const auto q = p->impl.generate();
    const std::chrono::duration<double> took =
        std::chrono::steady_clock::now() - start;
    out->points = q.points.size();
    out->seconds = took.count();
    out->points_per_second =
        took.count() > 0.0 ? static_cast<double>(q.points.size()) / took.count() : 0.0;
    return QPSET_OK;
  });
}

const char *qpset_report_text(const qpset_report *r) {
  return r ? r->text.c_str() : "";
}

void qpset_report_free(qpset_report *r) { delete r; }

} // extern "C"

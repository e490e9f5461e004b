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

// qpset command line tool. Talks to the library only through qpset.h.
//
// Exit status: 0 success, 1 validation or runtime failure, 2 usage or
// configuration error.

#include "qpset/qpset.h"

#include "CLI11.hpp"

#include <cstdio>
#include <memory>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

using PipelinePtr = std::unique_ptr<qpset_pipeline, decltype(&qpset_pipeline_free)>;
using PointsetPtr = std::unique_ptr<qpset_pointset, decltype(&qpset_pointset_free)>;
using ReportPtr = std::unique_ptr<qpset_report, decltype(&qpset_report_free)>;

int report_error(qpset_status st) {
  std::fprintf(stderr, "qpset: %s: %s\n", qpset_status_string(st),
               qpset_last_error());
  switch (st) {
  case QPSET_ERR_CONFIG:
  case QPSET_ERR_CONFIG_SYNTAX:
  case QPSET_ERR_INVALID_GROUP:
  case QPSET_ERR_INVALID_ARGUMENT:
    return kExitUsage;
  default:
    return kExitFailure;
  }
}

struct Options {
  std::string config;
  std::string out;
  std::string format;
  std::string input;
  bool oracle = false;
  unsigned threads = 0;
};

// Loads the pipeline and applies command-line overrides; returns an exit code
// on failure.
int open_pipeline(const Options &opt, PipelinePtr &out) {
  qpset_pipeline *raw = nullptr;
  qpset_status st = qpset_pipeline_from_file(opt.config.c_str(), &raw);
  out.reset(raw);
  if (st != QPSET_OK)
    return report_error(st);
  if (!opt.out.empty() && (st = qpset_pipeline_set_output(out.get(), opt.out.c_str())))
    return report_error(st);
  if (!opt.format.empty() &&
      (st = qpset_pipeline_set_format(out.get(), opt.format.c_str())))
    return report_error(st);
  if ((st = qpset_pipeline_set_threads(out.get(), opt.threads)))
    return report_error(st);
  return kExitOk;
}

int cmd_gen(const Options &opt) {
  PipelinePtr p(nullptr, qpset_pipeline_free);
  if (int rc = open_pipeline(opt, p))
    return rc;
  qpset_pointset *raw = nullptr;
  const qpset_status st = qpset_generate(p.get(), &raw);
  PointsetPtr s(raw, qpset_pointset_free);
  if (st != QPSET_OK && st != QPSET_ERR_TRUNCATED)
    return report_error(st);
  int rc = kExitOk;
  if (st == QPSET_ERR_TRUNCATED)
    rc = report_error(st); // still write what was found
  if (const qpset_status wst = qpset_write(p.get(), s.get(), nullptr))
    return report_error(wst);
  const char *dest = qpset_pipeline_output(p.get());
  std::fprintf(stderr, "qpset: %zu points written to %s\n",
               qpset_pointset_size(s.get()), *dest ? dest : "stdout");
  return rc;
}

int cmd_validate(const Options &opt) {
  PipelinePtr p(nullptr, qpset_pipeline_free);
  if (int rc = open_pipeline(opt, p))
    return rc;
  qpset_pointset *raw = nullptr;
  qpset_status st = opt.input.empty()
                        ? qpset_generate(p.get(), &raw)
                        : qpset_pointset_read_csv(p.get(), opt.input.c_str(), &raw);
  PointsetPtr s(raw, qpset_pointset_free);
  if (st != QPSET_OK)
    return report_error(st);
  int passed = 0;
  qpset_report *rep = nullptr;
  st = qpset_validate(p.get(), s.get(), opt.oracle ? 1 : 0, &passed, &rep);
  ReportPtr report(rep, qpset_report_free);
  if (st != QPSET_OK)
    return report_error(st);
  std::fputs(qpset_report_text(report.get()), stdout);
  return passed ? kExitOk : kExitFailure;
}

int cmd_facets(const Options &opt) {
  PipelinePtr p(nullptr, qpset_pipeline_free);
  if (int rc = open_pipeline(opt, p))
    return rc;
  qpset_report *rep = nullptr;
  const qpset_status st = qpset_facets_report(p.get(), &rep);
  ReportPtr report(rep, qpset_report_free);
  if (st != QPSET_OK)
    return report_error(st);
  std::fputs(qpset_report_text(report.get()), stdout);
  return kExitOk;
}

int cmd_bench(const Options &opt) {
  PipelinePtr p(nullptr, qpset_pipeline_free);
  if (int rc = open_pipeline(opt, p))
    return rc;
  qpset_bench_result r{};
  if (const qpset_status st = qpset_bench(p.get(), &r))
    return report_error(st);
  std::printf("k = %d\npoints = %llu\nseconds = %.6f\npoints_per_second = %.1f\n",
              qpset_pipeline_k(p.get()),
              static_cast<unsigned long long>(r.points), r.seconds,
              r.points_per_second);
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quasiperiodic point sets from G-clusters by strip projection"};
  app.set_version_flag("--version", std::string(qpset_version()));
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--config", opt.config, "Run configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--threads", opt.threads,
                    "Worker threads for membership tests (0 = all cores)");
  };

  auto *gen = app.add_subcommand("gen", "Generate points and write them out");
  add_common(gen);
  gen->add_option("--out", opt.out, "Output path, overrides the config ('-' = stdout)");
  gen->add_option("--format", opt.format, "csv, svg or xyz; overrides the config")
      ->check(CLI::IsMember({"csv", "svg", "xyz"}));

  auto *val = app.add_subcommand(
      "validate", "Check the covering property, symmetry and (optionally) the oracle");
  add_common(val);
  val->add_option("--input", opt.input,
                  "Validate points from a CSV written by 'gen' instead of regenerating")
      ->check(CLI::ExistingFile);
  val->add_flag("--oracle", opt.oracle,
                "Compare strip membership with the elimination oracle");

  auto *fac = app.add_subcommand("facets", "Summarise the window facet families");
  add_common(fac);

  auto *bench = app.add_subcommand("bench", "Time point generation");
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (gen->parsed())
    return cmd_gen(opt);
  if (val->parsed())
    return cmd_validate(opt);
  if (fac->parsed())
    return cmd_facets(opt);
  return cmd_bench(opt);
}

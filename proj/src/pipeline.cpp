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

#include "qpset/pipeline.hpp"
#include "qpset/io.hpp"

#include <algorithm>
#include <sstream>

namespace qpset {

Pipeline Pipeline::build(RunConfig cfg) {
  Pipeline p;
  p.cluster = build_cluster(cfg.group);
  p.embedding = build_embedding(p.cluster);
  p.strip = StripSpec(p.cluster, p.embedding);
  p.config = std::move(cfg);
  return p;
}

QuasiSet Pipeline::generate() const {
  return qpset::generate(cluster, embedding, strip, config.generation());
}

FacetSummary facet_summary(const StripSpec &s) {
  FacetSummary f;
  f.tuples = s.size();
  f.degenerate = s.degenerate_count();
  f.d_min = f.degenerate == f.tuples ? 0.0 : s.min_halfwidth();
  f.d_max = s.max_halfwidth();
  return f;
}

std::string facets_report(const Pipeline &p) {
  const FacetSummary f = facet_summary(p.strip);
  std::ostringstream os;
  os << "group = " << p.config.group.label() << '\n'
     << "n = " << p.cluster.n << '\n'
     << "k = " << p.cluster.k << '\n'
     << "tuples = " << f.tuples << '\n'
     << "d_min = " << format_real(f.d_min) << '\n'
     << "d_max = " << format_real(f.d_max) << '\n'
     << "degenerate = " << f.degenerate << '\n'
     << "kappa = " << format_real(p.embedding.kappa()) << '\n';
  return os.str();
}

ValidationResult validate(const Pipeline &p, const QuasiSet &q,
                          bool with_oracle) {
  ValidationResult r;
  r.covering = covering_check(q, p.strip, p.embedding);
  r.min_distance = q.points.size() >= 2 ? min_pair_distance(q) : 0.0;
  r.inactive_tuples = inactive_tuple_count(q, p.strip);

  r.symmetry_tolerance = 1e-6 * p.embedding.kappa();
  const double slack = q.config.slack.value_or(0.0);
  r.symmetry_radius = std::min(q.config.radius - 2.0 * p.cluster.diameter(),
                               q.config.radius - slack);
  bool symmetry_ok = true;
  if (r.symmetry_radius > 0.0) {
    const Generators g = generators_for(p.cluster.spec);
    const std::pair<const char *, SquareMatrix> ops[] = {
        {"a", g.a},
        {"b", g.b},
        {"inversion", SquareMatrix::scalar(p.cluster.n, -1.0)}};
    try {
      for (const auto &[name, m] : ops) {
        const double d = symmetry_defect(q, m, r.symmetry_radius);
        r.symmetry.emplace_back(name, d);
        symmetry_ok = symmetry_ok && d <= r.symmetry_tolerance;
      }
    } catch (const Error &ex) {
      if (ex.code() != ErrorCode::EmptyPatch)
        throw;
      r.symmetry.clear();
    }
  }

  if (with_oracle) {
    const auto samples = sources_and_neighbours(q);
    r.agreement = oracle_agreement(p.strip, p.embedding, samples);
  }
  r.passed = r.covering.ok() && symmetry_ok &&
             (!r.agreement || r.agreement->ok());
  return r;
}

std::string ValidationResult::text(const Pipeline &p, const QuasiSet &q) const {
  std::ostringstream os;
  os << "group = " << p.config.group.label() << '\n'
     << "k = " << p.cluster.k << '\n'
     << "points = " << q.points.size() << '\n'
     << "collisions = " << q.collisions << '\n'
     << "covering.neighbours_checked = " << covering.neighbours_checked << '\n'
     << "covering.violations = " << covering.violations << '\n'
     << "covering.off_strip_sources = " << covering.off_strip_sources << '\n'
     << "covering.max_deviation = " << format_real(covering.max_deviation) << '\n'
     << "occupation.definition = fraction of the 2k positions q+c occupied\n"
     << "occupation.interior_points = " << covering.interior_count() << '\n'
     << "occupation.median = "
     << format_real(covering.median_interior_occupation()) << '\n'
     << "occupation.mean = " << format_real(covering.mean_interior_occupation())
     << '\n';
  os << "occupation.histogram =";
  for (std::size_t m = 0; m < covering.histogram.size(); ++m)
    if (covering.histogram[m])
      os << ' ' << m << ':' << covering.histogram[m];
  os << '\n'
     << "min_pair_distance = " << format_real(min_distance) << '\n'
     << "inactive_tuples = " << inactive_tuples << '\n';
  if (symmetry.empty()) {
    os << "symmetry = skipped (empty interior patch)\n";
  } else {
    os << "symmetry.radius = " << format_real(symmetry_radius) << '\n'
       << "symmetry.tolerance = " << format_real(symmetry_tolerance) << '\n';
    for (const auto &[name, d] : symmetry)
      os << "symmetry." << name << " = " << format_real(d) << '\n';
  }
  if (agreement) {
    os << "oracle.samples = " << agreement->samples << '\n'
       << "oracle.inside = " << agreement->inside << '\n'
       << "oracle.disagreements = " << agreement->disagreements << '\n'
       << "oracle.boundary_disagreements = "
       << agreement->boundary_disagreements << '\n';
  }
  for (const auto &w : q.warnings)
    os << "warning = " << w << '\n';
  os << "status = " << (passed ? "PASS" : "FAIL") << '\n';
  return os.str();
}

} // namespace qpset

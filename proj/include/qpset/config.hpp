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

// Run configuration files. One `key = value` per line, `#` starts a comment:
//
//   group = D2m:5            # or: group = Y
//   shell = 1, 0             # repeat once per shell; `tau` is the golden ratio
//   shell = 0, tau
//   radius = 6.5
//   slack = 4                # optional, default one cluster diameter
//   max_points = 100000      # optional
//   format = csv             # optional: csv | svg | xyz
//   out = points.csv         # optional

#include "qpset/cluster.hpp"
#include "qpset/generator.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace qpset {

enum class OutputFormat { Csv, Svg, Xyz };

const char *to_string(OutputFormat f) noexcept;
OutputFormat parse_format(std::string_view name);

struct RunConfig {
  GroupSpec group;
  double radius = 0.0;
  std::optional<double> slack;
  std::size_t max_points = 1'000'000;
  OutputFormat format = OutputFormat::Csv;
  std::string out;
  unsigned threads = 0; ///< not read from files; 0 = hardware concurrency

  GenerationConfig generation() const;
};

/// Real-number token: a product/quotient of decimal literals and `tau`,
/// with an optional leading sign ("-tau", "2*tau", "tau/2", "0.5").
double parse_real(std::string_view token);

/// Throws ConfigSyntax (with the line number) for malformed lines and unknown
/// or repeated keys, ConfigSemantic for inconsistent content.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path &path);

} // namespace qpset

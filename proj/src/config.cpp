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

#include "qpset/config.hpp"
#include "qpset/error.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace qpset {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_factor(std::string_view tok) {
  tok = trim(tok);
  if (tok == "tau")
    return golden_ratio();
  if (tok.empty())
    throw std::invalid_argument("empty number");
  const std::string s(tok);
  char *end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
    throw std::invalid_argument("'" + s + "' is not a number");
  return v;
}

[[noreturn]] void syntax_error(int line, const std::string &msg) {
  throw Error(ErrorCode::ConfigSyntax,
              "config line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void semantic_error(const std::string &msg) {
  throw Error(ErrorCode::ConfigSemantic, "config: " + msg);
}

} // namespace

const char *to_string(OutputFormat f) noexcept {
  switch (f) {
  case OutputFormat::Csv:
    return "csv";
  case OutputFormat::Svg:
    return "svg";
  case OutputFormat::Xyz:
    return "xyz";
  }
  return "?";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv")
    return OutputFormat::Csv;
  if (name == "svg")
    return OutputFormat::Svg;
  if (name == "xyz")
    return OutputFormat::Xyz;
  throw Error(ErrorCode::ConfigSemantic,
              "unknown output format '" + std::string(name) +
                  "' (expected csv, svg or xyz)");
}

double parse_real(std::string_view token) {
  std::string_view t = trim(token);
  double sign = 1.0;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    // A sign directly on a literal is left to strtod; "-tau" needs help.
    const auto rest = trim(t.substr(1));
    if (rest.rfind("tau", 0) == 0) {
      sign = t.front() == '-' ? -1.0 : 1.0;
      t = rest;
    }
  }
  double value = 1.0;
  char op = '*';
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.size(); ++i) {
    if (i < t.size() && t[i] != '*' && t[i] != '/')
      continue;
    const double f = parse_factor(t.substr(start, i - start));
    value = op == '*' ? value * f : value / f;
    if (i < t.size())
      op = t[i];
    start = i + 1;
  }
  if (!std::isfinite(value))
    throw std::invalid_argument("value is not finite");
  return sign * value;
}

GenerationConfig RunConfig::generation() const {
  GenerationConfig g;
  g.radius = radius;
  g.slack = slack;
  g.max_points = max_points;
  g.threads = threads;
  return g;
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::set<std::string> seen;
  bool have_group = false, have_radius = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      syntax_error(lineno, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty())
      syntax_error(lineno, "missing key before '='");
    if (value.empty())
      syntax_error(lineno, "missing value for '" + key + "'");
    if (key != "shell" && !seen.insert(key).second)
      syntax_error(lineno, "key '" + key + "' given twice");

    try {
      if (key == "group") {
        if (value == "Y") {
          cfg.group.kind = GroupKind::Icosahedral;
        } else if (value.rfind("D2m:", 0) == 0) {
          const std::string m(trim(value.substr(4)));
          std::size_t used = 0;
          const int parsed = std::stoi(m, &used);
          if (used != m.size())
            throw std::invalid_argument("bad m");
          cfg.group.kind = GroupKind::Dihedral;
          cfg.group.m = parsed;
        } else {
          syntax_error(lineno, "group must be 'Y' or 'D2m:<m>'");
        }
        have_group = true;
      } else if (key == "shell") {
        Vec shell;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= value.size(); ++i) {
          if (i < value.size() && value[i] != ',')
            continue;
          shell.push_back(parse_real(value.substr(start, i - start)));
          start = i + 1;
        }
        if (shell.size() < 2 || shell.size() > 3)
          syntax_error(lineno, "shell needs 2 or 3 comma-separated components");
        cfg.group.shells.push_back(std::move(shell));
      } else if (key == "radius") {
        cfg.radius = parse_real(value);
        have_radius = true;
      } else if (key == "slack") {
        cfg.slack = parse_real(value);
      } else if (key == "max_points") {
        const std::string s(value);
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size() || v < 1)
          throw std::invalid_argument("max_points must be a positive integer");
        cfg.max_points = static_cast<std::size_t>(v);
      } else if (key == "format") {
        cfg.format = parse_format(value);
      } else if (key == "out") {
        cfg.out = std::string(value);
      } else {
        syntax_error(lineno, "unknown key '" + key + "'");
      }
    } catch (const Error &) {
      throw;
    } catch (const std::exception &ex) {
      syntax_error(lineno, "bad value for '" + key + "': " + ex.what());
    }
  }

  if (!have_group)
    semantic_error("missing required key 'group'");
  if (!have_radius)
    semantic_error("missing required key 'radius'");
  if (cfg.group.shells.empty())
    semantic_error("at least one 'shell' is required");
  if (!(cfg.radius > 0.0))
    semantic_error("radius must be > 0");
  if (cfg.slack && !(*cfg.slack >= 0.0))
    semantic_error("slack must be >= 0");
  if (cfg.group.kind == GroupKind::Dihedral && cfg.group.m < 2)
    semantic_error("dihedral group needs m >= 2");
  const auto n = static_cast<std::size_t>(cfg.group.dim());
  for (std::size_t i = 0; i < cfg.group.shells.size(); ++i)
    if (cfg.group.shells[i].size() != n)
      semantic_error("shell " + std::to_string(i + 1) + " has " +
                     std::to_string(cfg.group.shells[i].size()) +
                     " components but group " + cfg.group.label() + " needs " +
                     std::to_string(n));
  if (cfg.format == OutputFormat::Svg && n != 2)
    semantic_error("svg output needs a two-dimensional group");
  if (cfg.format == OutputFormat::Xyz && n != 3)
    semantic_error("xyz output needs a three-dimensional group");
  return cfg;
}

RunConfig load_config(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::Io, "cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

} // namespace qpset

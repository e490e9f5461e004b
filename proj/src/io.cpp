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

#include "qpset/io.hpp"
#include "qpset/analysis.hpp"
#include "qpset/error.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace qpset {

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double read_double(const std::string &s, int line) {
  char *end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
    throw Error(ErrorCode::Io, "csv line " + std::to_string(line) +
                                   ": bad number '" + s + "'");
  return v;
}

std::string short_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

} // namespace

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream &os, const QuasiSet &q,
               std::span<const double> occupation) {
  if (occupation.size() != q.points.size())
    throw Error(ErrorCode::InvalidArgument,
                "write_csv: one occupation value per point expected");
  os << (q.n == 3 ? "x,y,z,occupation,src\n" : "x,y,occupation,src\n");
  for (std::size_t i = 0; i < q.points.size(); ++i) {
    const auto &p = q.points[i];
    for (double c : p.position)
      os << format_real(c) << ',';
    os << format_real(occupation[i]) << ',';
    for (std::size_t j = 0; j < p.source.size(); ++j)
      os << (j ? ";" : "") << p.source[j];
    os << '\n';
  }
}

std::vector<CsvRow> read_csv(std::istream &is) {
  std::string line;
  if (!std::getline(is, line))
    throw Error(ErrorCode::Io, "csv: empty input");
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  int n = 0;
  if (line == "x,y,occupation,src")
    n = 2;
  else if (line == "x,y,z,occupation,src")
    n = 3;
  else
    throw Error(ErrorCode::Io, "csv: unexpected header '" + line + "'");

  std::vector<CsvRow> rows;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    const auto cols = split(line, ',');
    if (cols.size() != static_cast<std::size_t>(n + 2))
      throw Error(ErrorCode::Io, "csv line " + std::to_string(lineno) +
                                     ": expected " + std::to_string(n + 2) +
                                     " columns");
    CsvRow row;
    for (int i = 0; i < n; ++i)
      row.position.push_back(read_double(cols[i], lineno));
    row.occupation = read_double(cols[n], lineno);
    for (const auto &tok : split(cols[n + 1], ';')) {
      char *end = nullptr;
      errno = 0;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (tok.empty() || end != tok.c_str() + tok.size() || errno == ERANGE)
        throw Error(ErrorCode::Io, "csv line " + std::to_string(lineno) +
                                       ": bad lattice component '" + tok + "'");
      row.source.push_back(static_cast<std::int32_t>(v));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_svg(std::ostream &os, const QuasiSet &q) {
  if (q.n != 2)
    throw Error(ErrorCode::InvalidArgument, "svg output needs n = 2");
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const auto &p : q.points) {
    lo_x = std::min(lo_x, p.position[0]);
    hi_x = std::max(hi_x, p.position[0]);
    lo_y = std::min(lo_y, p.position[1]);
    hi_y = std::max(hi_y, p.position[1]);
  }
  const double spacing = q.points.size() >= 2 ? min_pair_distance(q) : 1.0;
  const double r = 0.15 * spacing;
  const double margin = 2.0 * r;
  const double x0 = lo_x - margin, y0 = -hi_y - margin;
  const double w = hi_x - lo_x + 2 * margin, h = hi_y - lo_y + 2 * margin;

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << short_real(x0)
     << ' ' << short_real(y0) << ' ' << short_real(w) << ' ' << short_real(h)
     << "\">\n"
     << "<g fill=\"black\">\n";
  for (const auto &p : q.points)
    os << "<circle cx=\"" << short_real(p.position[0]) << "\" cy=\""
       << short_real(p.position[1] == 0.0 ? 0.0 : -p.position[1]) << "\" r=\""
       << short_real(r) << "\"/>\n";
  os << "</g>\n</svg>\n";
}

void write_xyz(std::ostream &os, const QuasiSet &q) {
  if (q.n != 3)
    throw Error(ErrorCode::InvalidArgument, "xyz output needs n = 3");
  for (const auto &p : q.points)
    os << format_real(p.position[0]) << ' ' << format_real(p.position[1]) << ' '
       << format_real(p.position[2]) << '\n';
}

void write_points(std::ostream &os, OutputFormat format, const QuasiSet &q,
                  std::span<const double> occupation) {
  switch (format) {
  case OutputFormat::Csv:
    write_csv(os, q, occupation);
    break;
  case OutputFormat::Svg:
    write_svg(os, q);
    break;
  case OutputFormat::Xyz:
    write_xyz(os, q);
    break;
  }
}

} // namespace qpset

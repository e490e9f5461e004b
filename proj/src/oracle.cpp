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

#include "qpset/oracle.hpp"
#include "qpset/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qpset::oracle {

namespace {

double row_scale(const Inequality &q, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    s = std::max(s, std::abs(q.a[i]));
  return s;
}

// Coefficient of variable v, flushed to zero when negligible next to the row.
double coefficient(const Inequality &q, int v, int n) {
  const double c = q.a[v];
  return std::abs(c) <= 1e-12 * row_scale(q, n) ? 0.0 : c;
}

} // namespace

std::vector<Inequality> feasibility_system(const Embedding &e,
                                           std::span<const double> x,
                                           double eps) {
  if (x.size() != static_cast<std::size_t>(e.k()))
    throw Error(ErrorCode::DimensionMismatch,
                "window_contains: vector has wrong length");
  const int n = e.n();
  std::vector<Inequality> sys;
  sys.reserve(2 * x.size());
  for (int j = 0; j < e.k(); ++j) {
    Inequality upper, lower;
    for (int i = 0; i < n; ++i) {
      upper.a[i] = -e.w(i, j); // x_j - sum alpha_i w_ij <= 1/2 + eps
      lower.a[i] = e.w(i, j);  // -(x_j - sum alpha_i w_ij) <= 1/2 + eps
    }
    upper.b = 0.5 + eps - x[j];
    lower.b = 0.5 + eps + x[j];
    sys.push_back(upper);
    sys.push_back(lower);
  }
  return sys;
}

bool feasible(std::vector<Inequality> system, int n) {
  for (int v = 0; v + 1 < n; ++v) {
    std::vector<Inequality> pos, neg, next;
    for (const auto &q : system) {
      const double c = coefficient(q, v, n);
      if (c > 0.0)
        pos.push_back(q);
      else if (c < 0.0)
        neg.push_back(q);
      else {
        Inequality z = q;
        z.a[v] = 0.0;
        next.push_back(z);
      }
    }
    next.reserve(next.size() + pos.size() * neg.size());
    for (const auto &p : pos)
      for (const auto &q : neg) {
        const double mp = -q.a[v], mq = p.a[v];
        Inequality r;
        for (int i = 0; i < n; ++i)
          r.a[i] = mp * p.a[i] + mq * q.a[i];
        r.a[v] = 0.0;
        r.b = mp * p.b + mq * q.b;
        const double s = row_scale(r, n);
        if (s > 0.0) {
          for (int i = 0; i < n; ++i)
            r.a[i] /= s;
          r.b /= s;
        }
        next.push_back(r);
      }
    system = std::move(next);
  }

  // One unknown left: intersect its bounds.
  const int last = n - 1;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto &q : system) {
    const double c = coefficient(q, last, n);
    if (c > 0.0)
      hi = std::min(hi, q.b / c);
    else if (c < 0.0)
      lo = std::max(lo, q.b / c);
    else if (q.b < 0.0)
      return false;
  }
  return lo <= hi;
}

bool window_contains(const Embedding &e, std::span<const double> x,
                     double eps) {
  return feasible(feasibility_system(e, x, eps), e.n());
}

bool window_contains(const Embedding &e, std::span<const std::int32_t> x,
                     double eps) {
  const Vec real(x.begin(), x.end());
  return window_contains(e, real, eps);
}

} // namespace qpset::oracle

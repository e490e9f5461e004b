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

#include "qpset/linalg.hpp"
#include "qpset/error.hpp"

#include <algorithm>
#include <cmath>

namespace qpset {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

SquareMatrix::SquareMatrix(int n, std::initializer_list<double> row_major)
    : n_(n) {
  if (n < 1 || n > 3 || row_major.size() != static_cast<std::size_t>(n * n))
    throw Error(ErrorCode::DimensionMismatch, "SquareMatrix: bad initializer");
  auto it = row_major.begin();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      (*this)(r, c) = *it++;
}

SquareMatrix SquareMatrix::identity(int n) { return scalar(n, 1.0); }

SquareMatrix SquareMatrix::scalar(int n, double s) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    m(i, i) = s;
  return m;
}

Vec SquareMatrix::apply(std::span<const double> x) const {
  if (x.size() != static_cast<std::size_t>(n_))
    throw Error(ErrorCode::DimensionMismatch,
                "SquareMatrix::apply: vector length does not match matrix");
  Vec y(n_, 0.0);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      y[r] += (*this)(r, c) * x[c];
  return y;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix &rhs) const {
  SquareMatrix m(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      double s = 0.0;
      for (int i = 0; i < n_; ++i)
        s += (*this)(r, i) * rhs(i, c);
      m(r, c) = s;
    }
  return m;
}

SquareMatrix SquareMatrix::transposed() const {
  SquareMatrix m(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      m(c, r) = (*this)(r, c);
  return m;
}

double SquareMatrix::determinant() const {
  const auto &m = *this;
  switch (n_) {
  case 1:
    return m(0, 0);
  case 2:
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  case 3:
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  default:
    return 1.0;
  }
}

double SquareMatrix::max_abs_diff(const SquareMatrix &other) const {
  double worst = 0.0;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - other(r, c)));
  return worst;
}

} // namespace qpset

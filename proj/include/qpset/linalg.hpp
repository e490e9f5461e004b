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

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qpset {

/// Physical-space (n = 2 or 3) or superspace (length k) real vector.
using Vec = std::vector<double>;

/// Integer point of the superspace lattice Z^k.
using LatticeVec = std::vector<std::int32_t>;

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double distance(std::span<const double> a, std::span<const double> b);

/// Small dense n x n matrix, n <= 3; row-major.
class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n) {}
  SquareMatrix(int n, std::initializer_list<double> row_major);

  static SquareMatrix identity(int n);
  static SquareMatrix scalar(int n, double s);

  int dim() const { return n_; }
  double &operator()(int r, int c) { return a_[r * 3 + c]; }
  double operator()(int r, int c) const { return a_[r * 3 + c]; }

  Vec apply(std::span<const double> x) const;
  SquareMatrix operator*(const SquareMatrix &rhs) const;
  SquareMatrix transposed() const;
  double determinant() const;

  /// Largest entrywise deviation from `other`.
  double max_abs_diff(const SquareMatrix &other) const;

private:
  int n_ = 0;
  std::array<double, 9> a_{};
};

} // namespace qpset

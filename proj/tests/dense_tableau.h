// Copyright 2026 The crsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Textbook dense tableau simplex used as a reference in tests. Solves
// max c.x s.t. A x <= b, 0 <= x <= 1 with b >= 0 by turning the upper bounds
// into explicit rows, starting from the slack basis and pivoting with
// Bland's rule throughout. Slow and simple on purpose.

#ifndef CRSOLVE_TESTS_DENSE_TABLEAU_H_
#define CRSOLVE_TESTS_DENSE_TABLEAU_H_

#include <cmath>
#include <stdexcept>
#include <vector>

#include "crsolve/lp.h"

namespace crsolve::testing {

inline double DenseTableauValue(const LinearProgram& lp) {
  using Real = long double;
  const int n = lp.var_count;
  const int m = static_cast<int>(lp.rows.size()) + n;
  const int cols = n + m;  // structural then slack
  std::vector<std::vector<Real>> t(m + 1, std::vector<Real>(cols + 1, 0));
  for (int r = 0; r < static_cast<int>(lp.rows.size()); ++r) {
    if (lp.rows[r].rhs < 0) throw std::invalid_argument("rhs must be >= 0");
    for (const auto& [j, a] : lp.rows[r].terms) t[r][j] += a;
    t[r][cols] = lp.rows[r].rhs;
  }
  for (int j = 0; j < n; ++j) {
    const int r = static_cast<int>(lp.rows.size()) + j;
    t[r][j] = 1;
    t[r][cols] = 1;
  }
  for (int r = 0; r < m; ++r) t[r][n + r] = 1;
  // Reduced-cost row holds -c.
  for (const auto& [j, c] : lp.objective) t[m][j] -= c;
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = n + r;

  const Real eps = 1e-11L;
  for (int iter = 0; iter < 1000000; ++iter) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (t[m][j] < -eps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return static_cast<double>(t[m][cols]);
    int leave = -1;
    Real best = 0;
    for (int r = 0; r < m; ++r) {
      if (t[r][enter] <= eps) continue;
      const Real ratio = t[r][cols] / t[r][enter];
      if (leave < 0 || ratio < best - eps ||
          (std::fabs(ratio - best) <= eps && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) throw std::runtime_error("unbounded");
    const Real pivot = t[leave][enter];
    for (Real& x : t[leave]) x /= pivot;
    for (int r = 0; r <= m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Real f = t[r][enter];
      for (int j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  throw std::runtime_error("tableau did not terminate");
}

}  // namespace crsolve::testing

#endif  // CRSOLVE_TESTS_DENSE_TABLEAU_H_

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

#ifndef CRSOLVE_COMMON_H_
#define CRSOLVE_COMMON_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crsolve {

// Exact weights and objective coefficients. Converted to double only when a
// linear program is assembled.
using Rational = boost::multiprecision::cpp_rational;

// All recoverable failures (bad input, size guards, limits) are reported by
// throwing Error; the message names the violated condition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Primal feasibility tolerance of the LP layer.
inline constexpr double kFeasibilityTolerance = 1e-7;
// An entry within this distance of 0 or 1 counts as integral.
inline constexpr double kIntegralityTolerance = 1e-6;
// Comparisons between exact oracle values and floating point LP values.
inline constexpr double kOptimalityTolerance = 1e-6;

inline double ToDouble(const Rational& r) { return r.convert_to<double>(); }

// "p/q" or "p".
std::string ToString(const Rational& r);

// Sparse <=-row with integer coefficients over flat variable indices. Terms
// are sorted by index and hold no zero coefficients.
struct LinearConstraint {
  std::vector<std::pair<int, std::int64_t>> terms;
  std::int64_t rhs = 0;

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

}  // namespace crsolve

#endif  // CRSOLVE_COMMON_H_

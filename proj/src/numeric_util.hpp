// Copyright 2026 The dpcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Internal numeric helpers shared by the composition modules.

#ifndef DPCOMP_SRC_NUMERIC_UTIL_HPP_
#define DPCOMP_SRC_NUMERIC_UTIL_HPP_

#include <cmath>

namespace dpcomp {
namespace internal {

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void Add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

inline double LogBinomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// log(e^x + 1), stable for large x.
inline double LogExpPlusOne(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

// Ceiling with a downward nudge: arguments a hair above an integer (floating
// noise) round down. The admitted boundary terms vanish by construction.
inline long CeilGuarded(double v) { return static_cast<long>(std::ceil(v - 1e-9)); }

}  // namespace internal
}  // namespace dpcomp

#endif  // DPCOMP_SRC_NUMERIC_UTIL_HPP_

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

#ifndef DPCOMP_TESTS_TEST_UTIL_HPP_
#define DPCOMP_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "dpcomp/pwl.hpp"

namespace dpcomp::testutil {

// Max |f - g| over the union of both breakpoint sets plus the endpoints.
inline double BoundaryResidual(const TradeoffFunction& f, const TradeoffFunction& g) {
  std::vector<double> grid = {0.0, 1.0};
  for (double b : f.Body().Breakpoints()) grid.push_back(b);
  for (double b : g.Body().Breakpoints()) grid.push_back(b);
  double worst = 0.0;
  for (double t : grid) {
    if (t < 0.0 || t > 1.0) continue;
    worst = std::max(worst, std::abs(f.Body().Value(t) - g.Body().Value(t)));
  }
  return worst;
}

// Random canonical convex function on [0,1] with slopes in [-10, 0],
// intercepts placed so several pieces tend to stay active.
inline PwlFunction RandomConvexPwl(std::mt19937_64& rng, int max_pieces = 8) {
  std::uniform_int_distribution<int> count(1, max_pieces);
  std::uniform_real_distribution<double> slope(-10.0, 0.0);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  int n = count(rng);
  std::vector<LinePiece> pieces;
  pieces.reserve(n);
  for (int i = 0; i < n; ++i) {
    double a = slope(rng);
    // Anchor the line near a random point of the square so envelopes mix.
    double t0 = value(rng), v0 = value(rng);
    pieces.push_back({a, v0 - a * t0});
  }
  return PwlFunction(std::move(pieces), 0.0, 1.0);
}

inline DpConstraint RandomConstraint(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> eps(0.0, 2.0);
  std::uniform_real_distribution<double> delta(0.0, 0.4);
  return {eps(rng), delta(rng)};
}

}  // namespace dpcomp::testutil

#endif  // DPCOMP_TESTS_TEST_UTIL_HPP_

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

#ifndef DPCOMP_HETEROGENEOUS_HPP_
#define DPCOMP_HETEROGENEOUS_HPP_

#include <vector>

#include "dpcomp/pwl.hpp"

namespace dpcomp {

// Composition of x pure eps1-DP mechanisms with y pure eps2-DP mechanisms,
// eps1 >= eps2 >= 0, x + y >= 1. eps1 = eps2 gives the homogeneous region
// through the same code path. eps1 = 0 is accepted only with y = 0.
struct HetSpec {
  double eps1 = 0.0;
  double eps2 = 0.0;
  int x = 0;
  int y = 0;

  void Validate() const;
};

// One supporting slope of the heterogeneous region: the likelihood-ratio
// exponent eps1*(x - 2 a_star) + eps2*(y - 2 b_star), kept when >= 0.
struct SlopeIndex {
  int a_star = 0;
  int b_star = 0;
  double eps_value = 0.0;
};

// All admissible (a*, b*) pairs, slopes in decreasing order, ties broken by
// smaller a*. With dedupe, one representative per distinct slope (the
// lexicographically smallest pair); the region is unchanged either way.
std::vector<SlopeIndex> HetSlopes(const HetSpec& spec, bool dedupe = true);

// The offset matching a slope: the double sum over outcome counts, with
// binomials taken through log-gamma and the terms compensated-summed.
// Supported up to x + y <= 64.
double HetDelta(const HetSpec& spec, const SlopeIndex& idx);

// The (eps, delta) pairs defining the exact region, one per distinct slope.
std::vector<DpConstraint> HetConstraints(const HetSpec& spec);

// Exact privacy region of the heterogeneous composition: the intersection of
// the per-slope constraint regions.
PrivacyRegion HetRegion(const HetSpec& spec);

}  // namespace dpcomp

#endif  // DPCOMP_HETEROGENEOUS_HPP_

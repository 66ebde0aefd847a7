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

#ifndef DPCOMP_DOUBLE_DP_HPP_
#define DPCOMP_DOUBLE_DP_HPP_

#include <vector>

#include "dpcomp/pwl.hpp"

namespace dpcomp {

// k-fold composition of mechanisms that satisfy (eps1, delta1)-DP and
// (eps2, delta2)-DP simultaneously. Validation requires both constraints to
// be active: delta1 < delta2 and
// (1 - delta1)(1 + e^eps2) < (1 - delta2)(1 + e^eps1),
// which together force eps1 > eps2. eps2 = 0 is accepted.
struct DoubleDpSpec {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  int k = 1;

  void Validate() const;
};

// Mixing parameters of the extremal mechanism: alpha is the probability of
// the eps2 randomized-response component, delta_tilde = 1 - (1 - delta1)^k
// the probability that at least one of the k draws reveals the hypothesis.
struct MixWeights {
  double alpha = 0.0;
  double delta_tilde = 0.0;
};

double MixingWeightAlpha(const DoubleDpSpec& spec);
MixWeights ComputeMixWeights(const DoubleDpSpec& spec);

// Supporting constraints of the k-fold region from the closed-form slope
// enumeration (before the delta_tilde mixing step), deduplicated and sorted
// by decreasing eps. raw_count, when non-null, receives the number of
// enumerated (u, v) pairs before deduplication.
std::vector<DpConstraint> DirectConstraints(const DoubleDpSpec& spec,
                                            int* raw_count = nullptr);

// The exact region as a mixture over heterogeneous compositions, weighted by
// the binomial law of component picks.
PrivacyRegion ComposeDoubleMixture(const DoubleDpSpec& spec);

// The exact region from the closed-form constraint enumeration. Equal to the
// mixture route; O(k^5) term count, supported for k <= 40.
PrivacyRegion ComposeDoubleDirect(const DoubleDpSpec& spec);

// Exact k-fold region of a single (eps, delta)-DP constraint: the
// delta_tilde mixture of the full region with the pure-eps k-fold region.
PrivacyRegion ComposeSingle(double eps, double delta, int k);

// Upper bound: intersection of the two single-constraint composition
// regions.
PrivacyRegion BaselineIntersection(const DoubleDpSpec& spec);

struct TvBaselineResult {
  PrivacyRegion region;
  bool fell_back = false;  // auxiliary pair failed activity; intersection baseline used
  double eta = 0.0;
};

// Upper bound through the total-variation constraint: eta = delta2 +
// (1 - delta2) (e^eps2 - 1)/(e^eps2 + 1); composes ((eps1, delta1), (0, eta))
// and intersects with the eps2 single-constraint composition. Falls back to
// BaselineIntersection when the auxiliary pair is not jointly active.
TvBaselineResult BaselineTotalVariation(const DoubleDpSpec& spec);

}  // namespace dpcomp

#endif  // DPCOMP_DOUBLE_DP_HPP_

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

#ifndef DPCOMP_CONJUGATE_HPP_
#define DPCOMP_CONJUGATE_HPP_

#include <vector>

#include "dpcomp/pwl.hpp"

namespace dpcomp {

// A convex combination of hypothesis tests: weight alpha_i selects trade-off
// function f_i. All weights strictly positive, summing to 1 within 1e-12.
struct MixtureSpec {
  std::vector<double> weights;
  std::vector<TradeoffFunction> functions;

  void Validate() const;
};

// Legendre-Fenchel conjugate of a convex piecewise-affine function with a
// bounded domain [t_0, t_m]: f*(s) = max_j { t_j s - f(t_j) } over the domain
// endpoints and interior breakpoints; defined on all reals.
PwlFunction ConjugateBounded(const PwlFunction& f);

// Conjugate of a convex piecewise-affine function defined on all reals:
// finite on [a_1, a_m] (the extreme slopes), f*(s) = max over interior
// breakpoints of { t_j s - f(t_j) }. A single line yields the single-point
// domain [a_1, a_1] with value -b_1.
PwlFunction ConjugateUnbounded(const PwlFunction& f);

// Pointwise sum of the weighted conjugates, sum_i alpha_i f_i*, assembled by
// a sorted breakpoint sweep. The alpha_i-scaling of the change of variables
// g_i(x) = alpha_i f_i(x / alpha_i) is folded in analytically (g_i* equals
// alpha_i f_i*).
PwlFunction WeightedConjugateSum(const MixtureSpec& spec);

// Trade-off function of the mixture of hypothesis tests:
// f_m = (sum_i alpha_i f_i*)*, restricted to [0,1].
TradeoffFunction MixtureTradeoff(const MixtureSpec& spec);

// Region whose boundary is the mixture trade-off of the boundaries; equals
// the Minkowski convex combination sum_i alpha_i R_i.
PrivacyRegion RegionMixture(const std::vector<double>& weights,
                            const std::vector<PrivacyRegion>& regions);

}  // namespace dpcomp

#endif  // DPCOMP_CONJUGATE_HPP_

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

#ifndef DPCOMP_ORACLE_HPP_
#define DPCOMP_ORACLE_HPP_

#include <array>
#include <vector>

#include "dpcomp/pwl.hpp"

namespace dpcomp {

// A binary hypothesis test between two probability mass functions on a
// shared finite outcome set.
struct DiscreteTest {
  std::vector<double> p0;
  std::vector<double> p1;

  void Validate() const;
};

// Binary randomized response: p0 = (e^eps, 1) / (e^eps + 1), p1 reversed.
DiscreteTest RrTest(double eps);

// The extremal mixture mechanism for a pair of simultaneous DP constraints:
// two randomized-response components selected with probabilities (1 - alpha)
// and alpha, plus a perfectly revealing component of mass delta1. Four
// outcomes when delta1 = 0, six otherwise.
DiscreteTest DoubleDpTest(double eps1, double eps2, double delta1, double alpha);

// Product test on the Cartesian outcome space. Guarded at 2^20 outcomes.
DiscreteTest ProductTest(const std::vector<DiscreteTest>& tests);

// Exact trade-off function by Neyman-Pearson enumeration: sort outcomes by
// likelihood ratio p0/p1 descending (p1 = 0 first), walk the cumulative
// (1 - sum p0, sum p1) error pairs, and return the polyline in canonical
// line-constraint form. Outcomes with equal ratio are grouped first.
TradeoffFunction NpTradeoff(const DiscreteTest& test);

// sum_x max(0, p0(x) - p1(x)).
double TotalVariation(const DiscreteTest& test);

// Grid minimization of the two-test mixture objective
//   min { a1 f1(t1) + a2 f2(t2) : a1 t1 + a2 t2 = t }
// sampled at grid_n + 1 points. Brute-force reference for MixtureTradeoff.
std::vector<std::array<double, 2>> MixtureBruteforce(const std::vector<double>& weights,
                                                     const std::vector<TradeoffFunction>& fs,
                                                     int grid_n);

}  // namespace dpcomp

#endif  // DPCOMP_ORACLE_HPP_

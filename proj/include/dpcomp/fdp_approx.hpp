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

#ifndef DPCOMP_FDP_APPROX_HPP_
#define DPCOMP_FDP_APPROX_HPP_

#include <functional>
#include <vector>

#include "dpcomp/pwl.hpp"

namespace dpcomp {

// A smooth trade-off curve: strictly convex, twice differentiable,
// non-increasing, and symmetric about y = x (f(f(t)) = t). User-supplied
// callables must be safe for concurrent invocation. Validate() checks the
// requirements on an interior grid (endpoints excluded) and throws on
// failure.
struct SmoothTradeoff {
  std::function<double(double)> f;
  std::function<double(double)> f_prime;
  std::function<double(double)> f_double_prime;
  double f_at_zero = 1.0;

  void Validate() const;
};

// f(t) = Phi(Phi^{-1}(1 - t) - mu), the trade-off of testing N(0,1) against
// N(mu,1), with analytic first and second derivatives.
SmoothTradeoff GaussianTradeoff(double mu);

// The unique c with f(c) = c, by bisection.
double SmoothFixedPoint(const SmoothTradeoff& f);

// The 45-degree counter-clockwise rotation of the graph of f: an even convex
// curve g on [z, 0] with z = -f(0)/sqrt(2); g(u) = (x_u + f(x_u))/sqrt(2)
// where x_u solves (x - f(x))/sqrt(2) = u on [0, c].
class RotatedCurve {
 public:
  explicit RotatedCurve(SmoothTradeoff f);

  double z() const { return z_; }
  double FixedPoint() const { return c_; }

  // Solves u = (x - f(x))/sqrt(2) by bisection to 1e-13.
  double XOfU(double u) const;
  double G(double u) const;
  // g'(u) = (1 + f'(x_u)) / (1 - f'(x_u)); g'' accordingly.
  double GPrime(double u) const;
  double GDoublePrime(double u) const;

 private:
  SmoothTradeoff f_;
  double z_ = 0.0;
  double c_ = 0.0;
};

RotatedCurve NormalRotation(const SmoothTradeoff& f);

struct ApproxResult {
  std::vector<DpConstraint> constraints;  // one or two pairs
  double t_star = 0.0;
  // More than one sign change found by the 64-subinterval scan of the
  // tangency-matching equation; the first bisection root was returned.
  bool root_ambiguous = false;
};

// Tightest two-piece approximation from below (area-optimal): tangent lines
// to the rotated curve at (t* + z)/2 and t*/2, mapped back to (eps, delta)
// pairs. Collapses to the single second constraint when t* = z.
ApproxResult ApproxBelow(const SmoothTradeoff& f);

// Tightest approximation from above: chords anchored at (0, f(0)) and
// (c, c); single-constraint case when the chord through both beats the
// two-piece construction.
ApproxResult ApproxAbove(const SmoothTradeoff& f);

struct SandwichResult {
  std::vector<DpConstraint> lower;
  std::vector<DpConstraint> upper;
  double t_star_lower = 0.0;
  double t_star_upper = 0.0;
  bool lower_root_ambiguous = false;
};

// Bundle of ApproxBelow and ApproxAbove: double-DP constraint pairs with
// region_from_constraints(lower) <= f <= region_from_constraints(upper).
SandwichResult Sandwich(const SmoothTradeoff& f);

}  // namespace dpcomp

#endif  // DPCOMP_FDP_APPROX_HPP_

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

#ifndef DPCOMP_PWL_HPP_
#define DPCOMP_PWL_HPP_

#include <array>
#include <vector>

#include "dpcomp/errors.hpp"

namespace dpcomp {

// Absolute tolerance used by canonicalization when comparing intercepts and
// deciding whether a piece is active on a long enough interval to keep.
// Overridable (e.g. from the CLI via DP_COMPOSER_TOL); reads and writes are
// not synchronized, so set it once before concurrent use.
double CanonicalTol();
void SetCanonicalTol(double tol);

// One line constraint a*t + b.
struct LinePiece {
  double slope = 0.0;
  double intercept = 0.0;

  double At(double t) const { return slope * t + intercept; }
  friend bool operator==(const LinePiece&, const LinePiece&) = default;
};

// A convex piecewise-affine function stored as the upper envelope of line
// constraints over an interval (conceptually +inf outside). Canonical form:
// slopes strictly increasing and every piece active on a sub-interval of
// positive length (a single-point domain carries exactly one piece). The
// domain is either a finite interval or all of R (both endpoints infinite).
class PwlFunction {
 public:
  // Canonicalizes: sorts by slope, merges numerically indistinguishable
  // slopes keeping the larger intercept, prunes pieces that never achieve
  // the maximum. Throws ValidationError on malformed input.
  PwlFunction(std::vector<LinePiece> pieces, double domain_lo, double domain_hi);

  // Builds the function interpolating a convex vertex chain (x ascending).
  static PwlFunction FromVertices(const std::vector<std::array<double, 2>>& vertices);

  double DomainLo() const { return lo_; }
  double DomainHi() const { return hi_; }
  bool BoundedDomain() const;
  const std::vector<LinePiece>& Pieces() const { return pieces_; }

  // Max over pieces. Throws std::domain_error outside the domain (a slack of
  // 1e-9 absorbs floating noise at the endpoints).
  double Value(double t) const;

  // Interior crossing abscissas t_j = (b_j - b_{j+1}) / (a_{j+1} - a_j),
  // strictly increasing.
  std::vector<double> Breakpoints() const;

  // (t, value) at the domain endpoints and every interior breakpoint.
  // Requires a bounded domain.
  std::vector<std::array<double, 2>> Vertices() const;

 private:
  std::vector<LinePiece> pieces_;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// A trade-off function: convex, non-increasing, 0 <= f(t) <= 1-t on [0,1],
// f(1) = 0. Represents the lower boundary of a privacy region.
class TradeoffFunction {
 public:
  explicit TradeoffFunction(PwlFunction body);

  const PwlFunction& Body() const { return body_; }

  // Evaluates and clamps the result into [0,1]. Raw piece arithmetic is
  // available through Body().Value().
  double operator()(double t) const;

 private:
  PwlFunction body_;
};

// One (eps, delta)-DP guarantee. eps in nats, eps >= 0, delta in [0,1].
struct DpConstraint {
  double eps = 0.0;
  double delta = 0.0;
};

// The set {(bI, bII) : 1 - bI >= bII >= boundary(bI)}.
class PrivacyRegion {
 public:
  explicit PrivacyRegion(TradeoffFunction boundary) : boundary_(std::move(boundary)) {}
  const TradeoffFunction& Boundary() const { return boundary_; }

 private:
  TradeoffFunction boundary_;
};

// f_{eps,delta}(t) = max{0, 1 - delta - e^eps * t, e^-eps * (1 - delta - t)}.
TradeoffFunction MakeFEpsDelta(const DpConstraint& c);

// Upper envelope of a non-empty list; the boundary of the intersection of
// the corresponding regions.
TradeoffFunction PointwiseMax(const std::vector<TradeoffFunction>& fs);

PrivacyRegion RegionFromConstraints(const std::vector<DpConstraint>& cs);

// The unique c in [0,1) with f(c) = c, found by bisection on f(t) - t;
// |f(c) - c| <= 1e-12.
double FixedPoint(const TradeoffFunction& f);

// True iff f(t) <= g(t) + tol at every breakpoint of both functions
// (sufficient for convex piecewise-affine functions).
bool Leq(const TradeoffFunction& f, const TradeoffFunction& g, double tol);

// Breakpoints of the lower boundary in increasing beta_I order, including
// (0, f(0)) and (1, 0).
std::vector<std::array<double, 2>> RegionVertices(const PrivacyRegion& r);

}  // namespace dpcomp

#endif  // DPCOMP_PWL_HPP_

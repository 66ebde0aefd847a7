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

#include "dpcomp/fdp_approx.hpp"

#include <cmath>
#include <sstream>

#include "dpcomp/normal.hpp"

namespace dpcomp {
namespace {

constexpr double kSqrt2 = 1.4142135623730950488016887;
constexpr int kMaxBisect = 200;
constexpr double kArgTol = 1e-13;

// Bisection for an increasing objective; returns the argument where it
// crosses `target`.
template <typename F>
double BisectIncreasing(F&& fn, double lo, double hi, double target) {
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < kMaxBisect && hi - lo > kArgTol; ++i) {
    mid = 0.5 * (lo + hi);
    if (fn(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void SmoothTradeoff::Validate() const {
  if (!f || !f_prime || !f_double_prime) {
    throw ValidationError("SmoothTradeoff: all three callables are required");
  }
  if (!(f_at_zero > 0.0 && f_at_zero <= 1.0)) {
    throw ValidationError("SmoothTradeoff: f(0) must lie in (0,1]");
  }
  const int n = 101;
  for (int i = 1; i <= n; ++i) {
    double t = static_cast<double>(i) / (n + 1);
    if (!(f_double_prime(t) > 0.0)) {
      throw ValidationError("SmoothTradeoff: strict convexity fails on the interior grid");
    }
    if (f_prime(t) > 0.0) {
      throw ValidationError("SmoothTradeoff: f must be non-increasing");
    }
    double u = f_at_zero * t;
    if (std::abs(f(f(u)) - u) > 1e-9) {
      throw ValidationError("SmoothTradeoff: symmetry f(f(t)) = t fails on the grid");
    }
  }
}

SmoothTradeoff GaussianTradeoff(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw ValidationError("GaussianTradeoff: mu must be finite and > 0");
  }
  SmoothTradeoff out;
  out.f_at_zero = 1.0;
  // 1 - t rounds to 1 for t below ~1.1e-16; treat such arguments as the
  // t -> 0 limit so deep bisections near the endpoint stay finite.
  out.f = [mu](double t) {
    if (t <= 0.0 || 1.0 - t >= 1.0) return 1.0;
    if (t >= 1.0) return 0.0;
    return NormalCdf(NormalQuantile(1.0 - t) - mu);
  };
  out.f_prime = [mu](double t) {
    if (1.0 - t >= 1.0) return -1e300;
    double z = NormalQuantile(1.0 - t);
    return -std::exp(mu * z - 0.5 * mu * mu);
  };
  out.f_double_prime = [mu](double t) {
    if (1.0 - t >= 1.0) return 1e300;
    double z = NormalQuantile(1.0 - t);
    return mu * std::exp(mu * z - 0.5 * mu * mu) / NormalPdf(z);
  };
  return out;
}

double SmoothFixedPoint(const SmoothTradeoff& f) {
  return BisectIncreasing([&](double t) { return t - f.f(t); }, 0.0, 1.0, 0.0);
}

RotatedCurve::RotatedCurve(SmoothTradeoff f) : f_(std::move(f)) {
  f_.Validate();
  z_ = -f_.f_at_zero / kSqrt2;
  c_ = SmoothFixedPoint(f_);
}

RotatedCurve NormalRotation(const SmoothTradeoff& f) { return RotatedCurve(f); }

double RotatedCurve::XOfU(double u) const {
  if (u < z_ - 1e-9 || u > 1e-9) {
    throw std::domain_error("RotatedCurve: argument outside [z, 0]");
  }
  u = std::clamp(u, z_, 0.0);
  // (x - f(x))/sqrt(2) increases from z at x=0 to 0 at x=c.
  return BisectIncreasing([&](double x) { return (x - f_.f(x)) / kSqrt2; }, 0.0, c_, u);
}

double RotatedCurve::G(double u) const {
  double x = XOfU(u);
  return (x + f_.f(x)) / kSqrt2;
}

double RotatedCurve::GPrime(double u) const {
  double d = f_.f_prime(XOfU(u));
  return (1.0 + d) / (1.0 - d);
}

double RotatedCurve::GDoublePrime(double u) const {
  double x = XOfU(u);
  double d = f_.f_prime(x);
  double one_minus = 1.0 - d;
  return 2.0 * kSqrt2 * f_.f_double_prime(x) / (one_minus * one_minus * one_minus);
}

namespace {

DpConstraint ConstraintFromTangent(const RotatedCurve& rc, double ti) {
  double a = rc.GPrime(ti);
  double beta = rc.G(ti) - a * ti;
  double eps = std::log(-(a - 1.0) / (a + 1.0));
  double delta = 1.0 - kSqrt2 * beta / (a + 1.0);
  return {eps, std::max(0.0, delta)};
}

}  // namespace

ApproxResult ApproxBelow(const SmoothTradeoff& f) {
  RotatedCurve rc(f);
  const double z = rc.z();
  // Difference of the two tangent lines at their crossing abscissa; the root
  // matches Lagrange stationarity of the enclosed area.
  auto diff = [&](double t) {
    double t1 = 0.5 * (t + z);
    double t2 = 0.5 * t;
    double l1 = rc.G(t1) + rc.GPrime(t1) * (t - t1);
    double l2 = rc.G(t2) + rc.GPrime(t2) * (t - t2);
    return l1 - l2;
  };
  double lo = z + 1e-12, hi = -1e-12;
  double dlo = diff(lo), dhi = diff(hi);
  if (dlo == 0.0) {
    dlo = diff(lo = z + 1e-10);
  }
  if (dlo * dhi > 0.0) {
    std::ostringstream os;
    os << "ApproxBelow: no sign change for the tangency equation on [z,0]; "
       << "endpoint values " << dlo << " and " << dhi;
    throw ValidationError(os.str());
  }
  const bool increasing = dhi > dlo;
  double t_star = BisectIncreasing([&](double t) { return increasing ? diff(t) : -diff(t); },
                                   lo, hi, 0.0);

  // Scan for additional roots; report, do not guess.
  int sign_changes = 0;
  double prev = dlo;
  for (int i = 1; i <= 64; ++i) {
    double t = lo + (hi - lo) * i / 64.0;
    double d = diff(t);
    if (prev * d < 0.0) ++sign_changes;
    if (d != 0.0) prev = d;
  }
  bool ambiguous = sign_changes > 1;

  ApproxResult out;
  out.t_star = t_star;
  out.root_ambiguous = ambiguous;
  if (t_star <= z + 1e-9) {
    out.constraints = {ConstraintFromTangent(rc, 0.5 * t_star)};
  } else {
    out.constraints = {ConstraintFromTangent(rc, 0.5 * (t_star + z)),
                       ConstraintFromTangent(rc, 0.5 * t_star)};
  }
  return out;
}

ApproxResult ApproxAbove(const SmoothTradeoff& f) {
  f.Validate();
  const double c = SmoothFixedPoint(f);
  const double f0 = f.f_at_zero;
  // f' increases from -inf toward -1 at c; the secant slope (c - f0)/c lies
  // in between, so the bracket (0, c) is valid.
  const double target = (c - f0) / c;
  double t_star = BisectIncreasing(f.f_prime, 1e-15, c, target);

  ApproxResult out;
  out.t_star = t_star;
  double h = t_star * f0 + c * (f.f(t_star) - f0 - t_star);
  if (h >= 0.0) {
    out.constraints = {{std::log((f0 - c) / c), 1.0 - f0}};
    return out;
  }
  double ft = f.f(t_star);
  double eps1 = std::log((f0 - ft) / t_star);
  double eps2 = std::log((c - ft) / (t_star - c));
  out.constraints = {{eps1, 1.0 - f0}, {eps2, 1.0 - c * (1.0 + std::exp(eps2))}};
  return out;
}

SandwichResult Sandwich(const SmoothTradeoff& f) {
  ApproxResult below = ApproxBelow(f);
  ApproxResult above = ApproxAbove(f);
  return {std::move(below.constraints), std::move(above.constraints), below.t_star,
          above.t_star, below.root_ambiguous};
}

}  // namespace dpcomp

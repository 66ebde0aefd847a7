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

#include "dpcomp/pwl.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

namespace dpcomp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Slopes closer than this are numerically indistinguishable; keeping both
// would blow up the breakpoint set with meaningless crossings.
constexpr double kSlopeMergeTol = 1e-14;
// Slack accepted on Value() arguments before declaring a domain violation.
constexpr double kDomainSlack = 1e-9;

std::atomic<double> g_canonical_tol{1e-12};

double Crossing(const LinePiece& p, const LinePiece& q) {
  return (p.intercept - q.intercept) / (q.slope - p.slope);
}

// Upper envelope of slope-sorted, slope-distinct lines, then restriction to
// [lo, hi]: pieces whose active interval is shorter than the canonical
// tolerance are dropped. One pass can leave a fresh short interval behind, so
// the caller iterates to a fixed point.
std::vector<LinePiece> EnvelopePass(const std::vector<LinePiece>& lines, double lo,
                                    double hi, double active_tol) {
  std::vector<LinePiece> env;
  for (const LinePiece& p : lines) {
    while (env.size() >= 2) {
      const LinePiece& prev2 = env[env.size() - 2];
      if (Crossing(prev2, p) <= Crossing(prev2, env.back())) {
        env.pop_back();
      } else {
        break;
      }
    }
    env.push_back(p);
  }
  if (env.size() == 1) return env;

  std::vector<double> cross(env.size() - 1);
  for (size_t i = 0; i + 1 < env.size(); ++i) cross[i] = Crossing(env[i], env[i + 1]);

  std::vector<LinePiece> kept;
  for (size_t i = 0; i < env.size(); ++i) {
    double left = i == 0 ? -kInf : cross[i - 1];
    double right = i + 1 == env.size() ? kInf : cross[i];
    left = std::max(left, lo);
    right = std::min(right, hi);
    if (right - left > active_tol) kept.push_back(env[i]);
  }
  if (kept.empty()) {
    // Degenerate sliver domain: keep the argmax at the midpoint.
    double mid = 0.5 * (lo + hi);
    if (!std::isfinite(mid)) mid = 0.0;
    const LinePiece* best = &env.front();
    for (const LinePiece& p : env) {
      if (p.At(mid) > best->At(mid)) best = &p;
    }
    kept.push_back(*best);
  }
  return kept;
}

}  // namespace

double CanonicalTol() { return g_canonical_tol.load(std::memory_order_relaxed); }

void SetCanonicalTol(double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw ValidationError("canonical tolerance must be a finite non-negative value");
  }
  g_canonical_tol.store(tol, std::memory_order_relaxed);
}

PwlFunction::PwlFunction(std::vector<LinePiece> pieces, double domain_lo, double domain_hi)
    : lo_(domain_lo), hi_(domain_hi) {
  if (std::isnan(lo_) || std::isnan(hi_) || !(lo_ <= hi_)) {
    throw ValidationError("PwlFunction: domain_lo must be <= domain_hi");
  }
  if (std::isinf(lo_) != std::isinf(hi_)) {
    throw ValidationError("PwlFunction: domain must be a finite interval or all reals");
  }
  if (pieces.empty()) {
    throw ValidationError("PwlFunction: at least one piece required");
  }
  for (const LinePiece& p : pieces) {
    if (!std::isfinite(p.slope) || !std::isfinite(p.intercept)) {
      throw ValidationError("PwlFunction: piece coefficients must be finite");
    }
  }

  std::sort(pieces.begin(), pieces.end(), [](const LinePiece& a, const LinePiece& b) {
    return a.slope < b.slope || (a.slope == b.slope && a.intercept < b.intercept);
  });

  std::vector<LinePiece> merged;
  for (const LinePiece& p : pieces) {
    if (!merged.empty() && p.slope - merged.back().slope < kSlopeMergeTol) {
      if (p.intercept > merged.back().intercept) merged.back() = p;
    } else {
      merged.push_back(p);
    }
  }

  if (lo_ == hi_) {
    double v = -kInf;
    for (const LinePiece& p : merged) v = std::max(v, p.At(lo_));
    pieces_ = {LinePiece{0.0, v}};
    return;
  }

  const double active_tol = CanonicalTol();
  std::vector<LinePiece> env = std::move(merged);
  for (int pass = 0; pass < 8; ++pass) {
    std::vector<LinePiece> next = EnvelopePass(env, lo_, hi_, active_tol);
    bool stable = next == env;
    env = std::move(next);
    if (stable) break;
  }
  pieces_ = std::move(env);
}

bool PwlFunction::BoundedDomain() const { return std::isfinite(lo_) && std::isfinite(hi_); }

double PwlFunction::Value(double t) const {
  if (std::isnan(t) || t < lo_ - kDomainSlack || t > hi_ + kDomainSlack) {
    throw std::domain_error("PwlFunction::Value: argument outside domain");
  }
  t = std::clamp(t, lo_, hi_);
  double best = -kInf;
  for (const LinePiece& p : pieces_) best = std::max(best, p.At(t));
  return best;
}

std::vector<double> PwlFunction::Breakpoints() const {
  std::vector<double> bps;
  bps.reserve(pieces_.size() > 0 ? pieces_.size() - 1 : 0);
  for (size_t i = 0; i + 1 < pieces_.size(); ++i) {
    bps.push_back(Crossing(pieces_[i], pieces_[i + 1]));
  }
  return bps;
}

std::vector<std::array<double, 2>> PwlFunction::Vertices() const {
  if (!BoundedDomain()) {
    throw ValidationError("PwlFunction::Vertices: requires a bounded domain");
  }
  std::vector<std::array<double, 2>> out;
  out.push_back({lo_, Value(lo_)});
  for (double b : Breakpoints()) {
    if (b > lo_ && b < hi_) out.push_back({b, Value(b)});
  }
  if (hi_ > lo_) out.push_back({hi_, Value(hi_)});
  return out;
}

PwlFunction PwlFunction::FromVertices(const std::vector<std::array<double, 2>>& vertices) {
  if (vertices.size() < 2) {
    throw ValidationError("PwlFunction::FromVertices: need at least two vertices");
  }
  std::vector<LinePiece> pieces;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    const auto& [x0, y0] = vertices[i];
    const auto& [x1, y1] = vertices[i + 1];
    if (!(x1 > x0)) {
      throw ValidationError("PwlFunction::FromVertices: abscissas must strictly increase");
    }
    double slope = (y1 - y0) / (x1 - x0);
    pieces.push_back({slope, y0 - slope * x0});
  }
  return PwlFunction(std::move(pieces), vertices.front()[0], vertices.back()[0]);
}

TradeoffFunction::TradeoffFunction(PwlFunction body) : body_(std::move(body)) {
  if (body_.DomainLo() != 0.0 || body_.DomainHi() != 1.0) {
    throw ValidationError("TradeoffFunction: domain must be [0,1]");
  }
  const double slack = 1e-9;
  for (const LinePiece& p : body_.Pieces()) {
    if (p.slope > slack) {
      throw ValidationError("TradeoffFunction: must be non-increasing (positive slope found)");
    }
  }
  for (const auto& [t, v] : body_.Vertices()) {
    if (v < -slack || v > 1.0 - t + slack) {
      throw ValidationError("TradeoffFunction: values must satisfy 0 <= f(t) <= 1-t");
    }
  }
  if (std::abs(body_.Value(1.0)) > slack) {
    throw ValidationError("TradeoffFunction: f(1) must be 0");
  }
}

double TradeoffFunction::operator()(double t) const {
  return std::clamp(body_.Value(t), 0.0, 1.0);
}

TradeoffFunction MakeFEpsDelta(const DpConstraint& c) {
  if (!(c.eps >= 0.0) || !std::isfinite(c.eps)) {
    throw ValidationError("DpConstraint: eps must be finite and >= 0");
  }
  if (!(c.delta >= 0.0 && c.delta <= 1.0)) {
    throw ValidationError("DpConstraint: delta must lie in [0,1]");
  }
  const double ee = std::exp(c.eps);
  const double eme = std::exp(-c.eps);
  const double one_minus_delta = 1.0 - c.delta;
  std::vector<LinePiece> pieces = {
      {-ee, one_minus_delta},
      {-eme, eme * one_minus_delta},
      {0.0, 0.0},
  };
  return TradeoffFunction(PwlFunction(std::move(pieces), 0.0, 1.0));
}

TradeoffFunction PointwiseMax(const std::vector<TradeoffFunction>& fs) {
  if (fs.empty()) {
    throw ValidationError("PointwiseMax: empty list");
  }
  std::vector<LinePiece> all;
  for (const TradeoffFunction& f : fs) {
    const auto& ps = f.Body().Pieces();
    all.insert(all.end(), ps.begin(), ps.end());
  }
  return TradeoffFunction(PwlFunction(std::move(all), 0.0, 1.0));
}

PrivacyRegion RegionFromConstraints(const std::vector<DpConstraint>& cs) {
  if (cs.empty()) {
    throw ValidationError("RegionFromConstraints: empty constraint list");
  }
  std::vector<TradeoffFunction> fs;
  fs.reserve(cs.size());
  for (const DpConstraint& c : cs) fs.push_back(MakeFEpsDelta(c));
  return PrivacyRegion(PointwiseMax(fs));
}

double FixedPoint(const TradeoffFunction& f) {
  if (f(0.0) <= 0.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  double mid = 0.5;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    double g = f.Body().Value(mid) - mid;
    if (std::abs(g) <= 1e-13) break;
    if (g > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

bool Leq(const TradeoffFunction& f, const TradeoffFunction& g, double tol) {
  if (tol < 0.0) {
    throw ValidationError("Leq: tol must be >= 0");
  }
  std::vector<double> grid = {0.0, 1.0};
  for (double b : f.Body().Breakpoints()) grid.push_back(b);
  for (double b : g.Body().Breakpoints()) grid.push_back(b);
  for (double t : grid) {
    if (t < 0.0 || t > 1.0) continue;
    if (f.Body().Value(t) > g.Body().Value(t) + tol) return false;
  }
  return true;
}

std::vector<std::array<double, 2>> RegionVertices(const PrivacyRegion& r) {
  auto vs = r.Boundary().Body().Vertices();
  for (auto& [t, v] : vs) v = std::clamp(v, 0.0, 1.0);
  vs.back()[1] = 0.0;  // f(1) = 0 holds up to rounding; emit it exactly
  return vs;
}

}  // namespace dpcomp

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

#include "dpcomp/conjugate.hpp"

#include <cmath>
#include <limits>

namespace dpcomp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Duplicate breakpoints within this distance are coalesced during the sum
// sweep.
constexpr double kBreakpointCoalesceTol = 1e-12;

}  // namespace

void MixtureSpec::Validate() const {
  if (weights.empty() || weights.size() != functions.size()) {
    throw ValidationError("MixtureSpec: weights and functions must have equal length >= 1");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) {
      // Zero weights are rejected rather than dropped: pruning is the
      // caller's decision.
      throw ValidationError("MixtureSpec: all weights must be strictly positive");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ValidationError("MixtureSpec: weights must sum to 1 within 1e-12");
  }
}

PwlFunction ConjugateBounded(const PwlFunction& f) {
  if (!f.BoundedDomain()) {
    throw ValidationError("ConjugateBounded: input must have a bounded domain");
  }
  std::vector<double> ts;
  ts.push_back(f.DomainLo());
  for (double b : f.Breakpoints()) ts.push_back(b);
  if (f.DomainHi() > f.DomainLo()) ts.push_back(f.DomainHi());
  std::vector<LinePiece> lines;
  lines.reserve(ts.size());
  for (double t : ts) lines.push_back({t, -f.Value(t)});
  return PwlFunction(std::move(lines), -kInf, kInf);
}

PwlFunction ConjugateUnbounded(const PwlFunction& f) {
  if (f.BoundedDomain()) {
    throw ValidationError("ConjugateUnbounded: input must be defined on all reals");
  }
  const auto& pieces = f.Pieces();
  if (pieces.size() == 1) {
    return PwlFunction({LinePiece{0.0, -pieces[0].intercept}}, pieces[0].slope,
                       pieces[0].slope);
  }
  std::vector<LinePiece> lines;
  for (double t : f.Breakpoints()) lines.push_back({t, -f.Value(t)});
  return PwlFunction(std::move(lines), pieces.front().slope, pieces.back().slope);
}

PwlFunction WeightedConjugateSum(const MixtureSpec& spec) {
  spec.Validate();
  const size_t n = spec.weights.size();

  std::vector<PwlFunction> conj;
  std::vector<std::vector<double>> bps;
  conj.reserve(n);
  bps.reserve(n);
  for (const TradeoffFunction& f : spec.functions) {
    conj.push_back(ConjugateBounded(f.Body()));
    bps.push_back(conj.back().Breakpoints());
  }

  std::vector<double> events;
  for (const auto& b : bps) events.insert(events.end(), b.begin(), b.end());
  std::sort(events.begin(), events.end());
  std::vector<double> coalesced;
  for (double e : events) {
    if (coalesced.empty() || e - coalesced.back() > kBreakpointCoalesceTol) {
      coalesced.push_back(e);
    }
  }

  std::vector<size_t> idx(n, 0);
  std::vector<LinePiece> cells;
  auto emit = [&] {
    LinePiece sum{0.0, 0.0};
    for (size_t i = 0; i < n; ++i) {
      const LinePiece& p = conj[i].Pieces()[idx[i]];
      sum.slope += spec.weights[i] * p.slope;
      sum.intercept += spec.weights[i] * p.intercept;
    }
    cells.push_back(sum);
  };
  emit();
  for (double e : coalesced) {
    for (size_t i = 0; i < n; ++i) {
      while (idx[i] < bps[i].size() && bps[i][idx[i]] <= e + kBreakpointCoalesceTol) {
        ++idx[i];
      }
    }
    emit();
  }
  return PwlFunction(std::move(cells), -kInf, kInf);
}

TradeoffFunction MixtureTradeoff(const MixtureSpec& spec) {
  PwlFunction sum = WeightedConjugateSum(spec);
  PwlFunction m = ConjugateUnbounded(sum);
  // The conjugate's domain is [sum of weighted domain-los, sum of weighted
  // domain-his] = [0, ~1]; pin it to [0,1] exactly.
  return TradeoffFunction(PwlFunction(m.Pieces(), 0.0, 1.0));
}

PrivacyRegion RegionMixture(const std::vector<double>& weights,
                            const std::vector<PrivacyRegion>& regions) {
  MixtureSpec spec;
  spec.weights = weights;
  for (const PrivacyRegion& r : regions) spec.functions.push_back(r.Boundary());
  return PrivacyRegion(MixtureTradeoff(spec));
}

}  // namespace dpcomp

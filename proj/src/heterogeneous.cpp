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

#include "dpcomp/heterogeneous.hpp"

#include <algorithm>
#include <cmath>

#include "numeric_util.hpp"

namespace dpcomp {

using internal::CeilGuarded;
using internal::KahanSum;
using internal::LogBinomial;
using internal::LogExpPlusOne;

void HetSpec::Validate() const {
  if (x < 0 || y < 0 || x + y < 1) {
    throw ValidationError("HetSpec: need x >= 0, y >= 0, x + y >= 1");
  }
  if (x + y > 64) {
    throw ValidationError("HetSpec: x + y <= 64 supported");
  }
  if (!(eps2 >= 0.0) || !(eps1 >= eps2) || !std::isfinite(eps1)) {
    throw ValidationError("HetSpec: need eps1 >= eps2 >= 0");
  }
  if (eps1 == 0.0 && y > 0) {
    throw ValidationError("HetSpec: eps1 must be positive when y > 0");
  }
}

std::vector<SlopeIndex> HetSlopes(const HetSpec& spec, bool dedupe) {
  spec.Validate();
  std::vector<SlopeIndex> out;
  for (int a = 0; a <= spec.x; ++a) {
    for (int b = 0; b <= spec.y; ++b) {
      double eps = spec.eps1 * (spec.x - 2 * a) + spec.eps2 * (spec.y - 2 * b);
      if (eps < -1e-12) continue;
      out.push_back({a, b, std::max(0.0, eps)});
    }
  }
  std::sort(out.begin(), out.end(), [](const SlopeIndex& l, const SlopeIndex& r) {
    if (l.eps_value != r.eps_value) return l.eps_value > r.eps_value;
    if (l.a_star != r.a_star) return l.a_star < r.a_star;
    return l.b_star < r.b_star;
  });
  if (dedupe) {
    std::vector<SlopeIndex> unique;
    for (const SlopeIndex& s : out) {
      if (!unique.empty() && unique.back().eps_value - s.eps_value <= 1e-12) continue;
      unique.push_back(s);
    }
    out = std::move(unique);
  }
  return out;
}

double HetDelta(const HetSpec& spec, const SlopeIndex& idx) {
  spec.Validate();
  if (idx.a_star < 0 || idx.a_star > spec.x || idx.b_star < 0 || idx.b_star > spec.y) {
    throw ValidationError("HetDelta: slope index outside [0,x] x [0,y]");
  }
  const double e1 = spec.eps1, e2 = spec.eps2;
  const int x = spec.x, y = spec.y, as = idx.a_star, bs = idx.b_star;
  const double log_pre = -x * LogExpPlusOne(e1) - y * LogExpPlusOne(e2);

  KahanSum total;
  for (int b = 0; b <= y; ++b) {
    int w = y - bs - b;
    double arg = (w == 0 ? 0.0 : w * (e2 / e1)) + (x - as);
    int a0 = static_cast<int>(std::max(0L, CeilGuarded(arg)));
    double log_cyb = LogBinomial(y, b);
    for (int a = a0; a <= x; ++a) {
      double lead = a * e1 + b * e2;
      double other = e1 * (2.0 * (x - as) - a) + e2 * (2.0 * (y - bs) - b);
      if (other >= lead) continue;  // boundary terms vanish
      double log_term = log_pre + LogBinomial(x, a) + log_cyb + lead;
      total.Add(std::exp(log_term) * -std::expm1(other - lead));
    }
  }
  return total.sum;
}

std::vector<DpConstraint> HetConstraints(const HetSpec& spec) {
  spec.Validate();
  std::vector<DpConstraint> cons;
  for (const SlopeIndex& s : HetSlopes(spec)) {
    cons.push_back({s.eps_value, HetDelta(spec, s)});
  }
  return cons;
}

PrivacyRegion HetRegion(const HetSpec& spec) {
  return RegionFromConstraints(HetConstraints(spec));
}

}  // namespace dpcomp

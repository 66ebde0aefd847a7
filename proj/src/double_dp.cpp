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

#include "dpcomp/double_dp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "dpcomp/conjugate.hpp"
#include "dpcomp/heterogeneous.hpp"
#include "numeric_util.hpp"

namespace dpcomp {

using internal::CeilGuarded;
using internal::KahanSum;
using internal::LogBinomial;
using internal::LogExpPlusOne;

namespace {

PrivacyRegion FullRegion() { return RegionFromConstraints({DpConstraint{0.0, 1.0}}); }

// delta_tilde-mix a region with the full triangle R(0,1); the identity when
// delta_tilde = 0 (zero mixture weights are rejected by MixtureSpec).
PrivacyRegion MixWithFullRegion(double delta_tilde, PrivacyRegion inner) {
  if (delta_tilde <= 0.0) return inner;
  return RegionMixture({delta_tilde, 1.0 - delta_tilde}, {FullRegion(), std::move(inner)});
}

// Offset matching slope eps_{u,v}: sum over outcome-count tuples
// (a,b,c,d), d = k-a-b-c, of multinomial-weighted positive parts.
double DeltaUV(const DoubleDpSpec& spec, double alpha, int u, int v) {
  const double e1 = spec.eps1, e2 = spec.eps2;
  const int k = spec.k;
  const double log_w1 = std::log1p(-alpha) - LogExpPlusOne(e1);
  const double log_w2 = std::log(alpha) - LogExpPlusOne(e2);
  const double log_kfact = std::lgamma(k + 1.0);

  KahanSum total;
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b + a <= k; ++b) {
      for (int c = 0; c + b + a <= k; ++c) {
        int d = k - a - b - c;
        double lead = a * e1 + b * e2;
        double other = (d + u + v - k) * e1 + (c + u - v) * e2;
        if (other >= lead) continue;  // outside B; boundary terms vanish
        double log_mult = log_kfact - std::lgamma(a + 1.0) - std::lgamma(b + 1.0) -
                          std::lgamma(c + 1.0) - std::lgamma(d + 1.0);
        double log_term = log_mult + (a + d) * log_w1 + (b + c) * log_w2 + lead;
        total.Add(std::exp(log_term) * -std::expm1(other - lead));
      }
    }
  }
  return total.sum;
}

}  // namespace

void DoubleDpSpec::Validate() const {
  if (k < 1) {
    throw ValidationError("DoubleDpSpec: k must be a positive integer");
  }
  if (!(eps1 > 0.0) || !std::isfinite(eps1)) {
    throw ValidationError("DoubleDpSpec: eps1 must be finite and > 0");
  }
  if (!(eps2 >= 0.0) || !std::isfinite(eps2)) {
    throw ValidationError("DoubleDpSpec: eps2 must be finite and >= 0");
  }
  if (eps1 == eps2) {
    throw ValidationError("DoubleDpSpec: eps1 and eps2 must differ");
  }
  if (!(delta1 >= 0.0 && delta1 < 1.0) || !(delta2 >= 0.0 && delta2 < 1.0)) {
    throw ValidationError("DoubleDpSpec: delta values must lie in [0,1)");
  }
  if (!(delta1 < delta2)) {
    std::ostringstream os;
    os << "DoubleDpSpec: constraint activity requires delta1 < delta2; got delta1=" << delta1
       << " >= delta2=" << delta2;
    throw ValidationError(os.str());
  }
  double lhs = (1.0 - delta1) * (1.0 + std::exp(eps2));
  double rhs = (1.0 - delta2) * (1.0 + std::exp(eps1));
  if (!(lhs < rhs)) {
    std::ostringstream os;
    os << "DoubleDpSpec: constraint activity requires "
          "(1-delta1)(1+e^eps2) < (1-delta2)(1+e^eps1); got "
       << lhs << " >= " << rhs << " (excess " << lhs - rhs << ")";
    throw ValidationError(os.str());
  }
}

double MixingWeightAlpha(const DoubleDpSpec& spec) {
  spec.Validate();
  double num = (1.0 - spec.delta1) * std::exp(spec.eps2) -
               (1.0 - spec.delta2) * std::exp(spec.eps1) + (spec.delta2 - spec.delta1);
  double den = (std::exp(spec.eps2) - std::exp(spec.eps1)) * (1.0 - spec.delta1);
  double alpha = num / den;
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("MixingWeightAlpha: alpha fell outside (0,1)");
  }
  return alpha;
}

MixWeights ComputeMixWeights(const DoubleDpSpec& spec) {
  return {MixingWeightAlpha(spec), 1.0 - std::pow(1.0 - spec.delta1, spec.k)};
}

std::vector<DpConstraint> DirectConstraints(const DoubleDpSpec& spec, int* raw_count) {
  spec.Validate();
  if (spec.k > 40) {
    throw ValidationError(
        "DirectConstraints: k <= 40 supported by the direct enumeration; "
        "use the mixture route for larger k");
  }
  const double alpha = MixingWeightAlpha(spec);
  const double e1 = spec.eps1, e2 = spec.eps2;
  const int k = spec.k;

  struct Entry {
    double eps;
    double delta;
  };
  std::vector<Entry> entries;
  for (int v = 0; v <= k; ++v) {
    long umin_l = std::max(0L, CeilGuarded((k * e1 - v * (e1 - e2)) / (e1 + e2)));
    for (int u = static_cast<int>(umin_l); u <= k; ++u) {
      double eps = e1 * (u + v - k) + e2 * (u - v);
      if (eps < -1e-12) continue;
      entries.push_back({std::max(0.0, eps), DeltaUV(spec, alpha, u, v)});
    }
  }
  if (raw_count != nullptr) *raw_count = static_cast<int>(entries.size());

  std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    return l.eps > r.eps || (l.eps == r.eps && l.delta > r.delta);
  });
  std::vector<DpConstraint> cons;
  for (const Entry& e : entries) {
    if (!cons.empty() && cons.back().eps - e.eps <= 1e-12) {
      // Duplicate slopes must carry the same offset.
      assert(std::abs(cons.back().delta - e.delta) <= 1e-12);
      continue;
    }
    cons.push_back({e.eps, e.delta});
  }
  return cons;
}

PrivacyRegion ComposeDoubleMixture(const DoubleDpSpec& spec) {
  MixWeights w = ComputeMixWeights(spec);
  const int k = spec.k;
  std::vector<double> weights;
  std::vector<PrivacyRegion> regions;
  if (w.delta_tilde > 0.0) {
    weights.push_back(w.delta_tilde);
    regions.push_back(FullRegion());
  }
  for (int i = 0; i <= k; ++i) {
    double log_binom = LogBinomial(k, i) + i * std::log1p(-w.alpha) +
                       (k - i) * std::log(w.alpha);
    weights.push_back((1.0 - w.delta_tilde) * std::exp(log_binom));
    regions.push_back(HetRegion({spec.eps1, spec.eps2, i, k - i}));
  }
  return RegionMixture(weights, regions);
}

PrivacyRegion ComposeDoubleDirect(const DoubleDpSpec& spec) {
  PrivacyRegion inner = RegionFromConstraints(DirectConstraints(spec));
  return MixWithFullRegion(1.0 - std::pow(1.0 - spec.delta1, spec.k), std::move(inner));
}

PrivacyRegion ComposeSingle(double eps, double delta, int k) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw ValidationError("ComposeSingle: eps must be finite and >= 0");
  }
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw ValidationError("ComposeSingle: delta must lie in [0,1)");
  }
  if (k < 1) {
    throw ValidationError("ComposeSingle: k must be a positive integer");
  }
  PrivacyRegion pure = HetRegion({eps, eps, k, 0});
  return MixWithFullRegion(1.0 - std::pow(1.0 - delta, k), std::move(pure));
}

PrivacyRegion BaselineIntersection(const DoubleDpSpec& spec) {
  spec.Validate();
  PrivacyRegion a = ComposeSingle(spec.eps1, spec.delta1, spec.k);
  PrivacyRegion b = ComposeSingle(spec.eps2, spec.delta2, spec.k);
  return PrivacyRegion(PointwiseMax({a.Boundary(), b.Boundary()}));
}

TvBaselineResult BaselineTotalVariation(const DoubleDpSpec& spec) {
  spec.Validate();
  double eta = spec.delta2 + (1.0 - spec.delta2) * (std::exp(spec.eps2) - 1.0) /
                                 (std::exp(spec.eps2) + 1.0);
  DoubleDpSpec aux{spec.eps1, 0.0, spec.delta1, eta, spec.k};
  try {
    aux.Validate();
  } catch (const ValidationError&) {
    return {BaselineIntersection(spec), true, eta};
  }
  PrivacyRegion a = ComposeDoubleDirect(aux);
  PrivacyRegion b = ComposeSingle(spec.eps2, spec.delta2, spec.k);
  return {PrivacyRegion(PointwiseMax({a.Boundary(), b.Boundary()})), false, eta};
}

}  // namespace dpcomp

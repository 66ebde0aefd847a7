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

#include "dpcomp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace dpcomp {
namespace {

constexpr std::size_t kMaxOutcomes = std::size_t{1} << 20;

struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void Add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Likelihood-ratio order, p1 = 0 first; exact via cross products.
bool RatioGreater(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return a[0] * b[1] > b[0] * a[1];
}

bool RatioEqual(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  double lhs = a[0] * b[1];
  double rhs = b[0] * a[1];
  return std::abs(lhs - rhs) <= 1e-12 * std::max({lhs, rhs, 1e-300});
}

}  // namespace

void DiscreteTest::Validate() const {
  if (p0.size() != p1.size() || p0.empty()) {
    throw ValidationError("DiscreteTest: p0 and p1 must be non-empty and equally sized");
  }
  Kahan s0, s1;
  for (std::size_t i = 0; i < p0.size(); ++i) {
    if (!(p0[i] >= 0.0) || !(p1[i] >= 0.0)) {
      throw ValidationError("DiscreteTest: probabilities must be non-negative");
    }
    s0.Add(p0[i]);
    s1.Add(p1[i]);
  }
  if (std::abs(s0.sum - 1.0) > 1e-12 || std::abs(s1.sum - 1.0) > 1e-12) {
    throw ValidationError("DiscreteTest: each distribution must sum to 1 within 1e-12");
  }
}

DiscreteTest RrTest(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw ValidationError("RrTest: eps must be finite and >= 0");
  }
  double hi = std::exp(eps) / (std::exp(eps) + 1.0);
  double lo = 1.0 / (std::exp(eps) + 1.0);
  return DiscreteTest{{hi, lo}, {lo, hi}};
}

DiscreteTest DoubleDpTest(double eps1, double eps2, double delta1, double alpha) {
  if (!(eps1 >= 0.0) || !(eps2 >= 0.0)) {
    throw ValidationError("DoubleDpTest: eps values must be >= 0");
  }
  if (!(delta1 >= 0.0 && delta1 < 1.0)) {
    throw ValidationError("DoubleDpTest: delta1 must lie in [0,1)");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("DoubleDpTest: alpha must lie in [0,1]");
  }
  double h1 = std::exp(eps1) / (std::exp(eps1) + 1.0);
  double l1 = 1.0 / (std::exp(eps1) + 1.0);
  double h2 = std::exp(eps2) / (std::exp(eps2) + 1.0);
  double l2 = 1.0 / (std::exp(eps2) + 1.0);
  // Outcome order 0..3; the component pairs straddle so that the likelihood
  // ratio is monotone in the outcome index.
  std::vector<double> p0 = {(1 - alpha) * h1, alpha * h2, alpha * l2, (1 - alpha) * l1};
  std::vector<double> p1 = {(1 - alpha) * l1, alpha * l2, alpha * h2, (1 - alpha) * h1};
  if (delta1 > 0.0) {
    for (double& v : p0) v *= 1.0 - delta1;
    for (double& v : p1) v *= 1.0 - delta1;
    p0.insert(p0.begin(), delta1);
    p0.push_back(0.0);
    p1.insert(p1.begin(), 0.0);
    p1.push_back(delta1);
  }
  return DiscreteTest{std::move(p0), std::move(p1)};
}

DiscreteTest ProductTest(const std::vector<DiscreteTest>& tests) {
  if (tests.empty()) {
    throw ValidationError("ProductTest: empty list");
  }
  std::size_t total = 1;
  for (const DiscreteTest& t : tests) {
    t.Validate();
    if (t.p0.size() > kMaxOutcomes / total) {
      throw ValidationError("ProductTest: outcome space exceeds 2^20");
    }
    total *= t.p0.size();
  }
  DiscreteTest out{{1.0}, {1.0}};
  for (const DiscreteTest& t : tests) {
    std::vector<double> n0, n1;
    n0.reserve(out.p0.size() * t.p0.size());
    n1.reserve(out.p1.size() * t.p1.size());
    for (std::size_t i = 0; i < out.p0.size(); ++i) {
      for (std::size_t j = 0; j < t.p0.size(); ++j) {
        n0.push_back(out.p0[i] * t.p0[j]);
        n1.push_back(out.p1[i] * t.p1[j]);
      }
    }
    out.p0 = std::move(n0);
    out.p1 = std::move(n1);
  }
  return out;
}

TradeoffFunction NpTradeoff(const DiscreteTest& test) {
  test.Validate();
  std::vector<std::array<double, 2>> items;
  items.reserve(test.p0.size());
  for (std::size_t i = 0; i < test.p0.size(); ++i) {
    if (test.p0[i] > 0.0 || test.p1[i] > 0.0) items.push_back({test.p0[i], test.p1[i]});
  }
  std::sort(items.begin(), items.end(), RatioGreater);

  // Group equal ratios; their order within the optimal test is immaterial.
  std::vector<std::array<double, 2>> groups;
  for (const auto& it : items) {
    if (!groups.empty() && RatioEqual(groups.back(), it)) {
      groups.back()[0] += it[0];
      groups.back()[1] += it[1];
    } else {
      groups.push_back(it);
    }
  }

  // Cumulative error pairs over prefixes of the non-rejection set.
  std::vector<std::array<double, 2>> points;
  points.push_back({1.0, 0.0});
  Kahan c0, c1;
  for (const auto& g : groups) {
    c0.Add(g[0]);
    c1.Add(g[1]);
    points.push_back({1.0 - c0.sum, c1.sum});
  }
  std::reverse(points.begin(), points.end());
  points.front()[0] = 0.0;  // 1 - sum(p0) up to rounding

  // A zero-p0 group produces a vertical step at beta_I = 0; the function
  // value there is the lower end.
  std::vector<std::array<double, 2>> vertices;
  for (const auto& pt : points) {
    double y = std::clamp(pt[1], 0.0, 1.0);
    if (!vertices.empty() && pt[0] - vertices.back()[0] < 1e-15) {
      vertices.back()[1] = std::min(vertices.back()[1], y);
      continue;
    }
    vertices.push_back({std::clamp(pt[0], 0.0, 1.0), y});
  }
  vertices.back()[0] = 1.0;
  return TradeoffFunction(PwlFunction::FromVertices(vertices));
}

double TotalVariation(const DiscreteTest& test) {
  test.Validate();
  Kahan sum;
  for (std::size_t i = 0; i < test.p0.size(); ++i) {
    sum.Add(std::max(0.0, test.p0[i] - test.p1[i]));
  }
  return sum.sum;
}

std::vector<std::array<double, 2>> MixtureBruteforce(const std::vector<double>& weights,
                                                     const std::vector<TradeoffFunction>& fs,
                                                     int grid_n) {
  if (weights.size() != 2 || fs.size() != 2) {
    throw ValidationError("MixtureBruteforce: exactly two components supported");
  }
  if (grid_n < 100) {
    throw ValidationError("MixtureBruteforce: grid_n must be >= 100");
  }
  const double a1 = weights[0], a2 = weights[1];
  std::vector<std::array<double, 2>> out;
  out.reserve(grid_n + 1);
  for (int i = 0; i <= grid_n; ++i) {
    double t = static_cast<double>(i) / grid_n;
    double best = 2.0;
    for (int j = 0; j <= grid_n; ++j) {
      double t1 = static_cast<double>(j) / grid_n;
      double t2 = (t - a1 * t1) / a2;
      if (t2 < -1e-9 || t2 > 1.0 + 1e-9) continue;
      t2 = std::clamp(t2, 0.0, 1.0);
      best = std::min(best, a1 * fs[0](t1) + a2 * fs[1](t2));
    }
    out.push_back({t, best});
  }
  return out;
}

}  // namespace dpcomp

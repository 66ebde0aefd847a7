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

#ifndef DPCOMP_NORMAL_HPP_
#define DPCOMP_NORMAL_HPP_

namespace dpcomp {

double NormalPdf(double x);

// Phi(x), via the complementary error function.
double NormalCdf(double x);

// Phi^{-1}(p) for p in (0,1): rational initial guess refined by one Newton
// step on the CDF. Round-trips with NormalCdf to ~1e-12.
double NormalQuantile(double p);

}  // namespace dpcomp

#endif  // DPCOMP_NORMAL_HPP_

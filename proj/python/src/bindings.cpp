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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dpcomp/conjugate.hpp"
#include "dpcomp/double_dp.hpp"
#include "dpcomp/fdp_approx.hpp"
#include "dpcomp/heterogeneous.hpp"
#include "dpcomp/oracle.hpp"
#include "dpcomp/pwl.hpp"

namespace py = pybind11;
using namespace dpcomp;

namespace {

std::vector<DpConstraint> ToConstraints(const std::vector<std::pair<double, double>>& pairs) {
  std::vector<DpConstraint> cs;
  cs.reserve(pairs.size());
  for (const auto& [e, d] : pairs) cs.push_back({e, d});
  return cs;
}

std::vector<std::pair<double, double>> FromConstraints(const std::vector<DpConstraint>& cs) {
  std::vector<std::pair<double, double>> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.emplace_back(c.eps, c.delta);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact privacy regions for composed differentially private mechanisms";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<TradeoffFunction>(m, "TradeoffFunction")
      .def("__call__", &TradeoffFunction::operator(), py::arg("t"))
      .def("vertices",
           [](const TradeoffFunction& f) {
             std::vector<std::pair<double, double>> out;
             for (const auto& v : f.Body().Vertices()) out.emplace_back(v[0], v[1]);
             return out;
           })
      .def("pieces",
           [](const TradeoffFunction& f) {
             std::vector<std::pair<double, double>> out;
             for (const auto& p : f.Body().Pieces()) out.emplace_back(p.slope, p.intercept);
             return out;
           })
      .def("fixed_point", [](const TradeoffFunction& f) { return FixedPoint(f); });

  py::class_<PrivacyRegion>(m, "PrivacyRegion")
      .def_property_readonly("boundary", &PrivacyRegion::Boundary)
      .def("vertices", [](const PrivacyRegion& r) {
        std::vector<std::pair<double, double>> out;
        for (const auto& v : RegionVertices(r)) out.emplace_back(v[0], v[1]);
        return out;
      });

  m.def(
      "feps_delta",
      [](double eps, double delta) { return MakeFEpsDelta({eps, delta}); },
      py::arg("eps"), py::arg("delta") = 0.0,
      "Trade-off function max{0, 1-delta-e^eps t, e^-eps (1-delta-t)}");

  m.def(
      "region_from_constraints",
      [](const std::vector<std::pair<double, double>>& cs) {
        return RegionFromConstraints(ToConstraints(cs));
      },
      py::arg("constraints"), "Intersection region of (eps, delta) pairs");

  m.def(
      "pointwise_max",
      [](const std::vector<TradeoffFunction>& fs) { return PointwiseMax(fs); },
      py::arg("functions"));

  m.def(
      "leq",
      [](const TradeoffFunction& f, const TradeoffFunction& g, double tol) {
        return Leq(f, g, tol);
      },
      py::arg("f"), py::arg("g"), py::arg("tol") = 0.0);

  m.def(
      "mixture_tradeoff",
      [](const std::vector<double>& weights, const std::vector<TradeoffFunction>& fs) {
        return MixtureTradeoff({weights, fs});
      },
      py::arg("weights"), py::arg("functions"),
      "Trade-off function of the observed-class mixture of hypothesis tests");

  m.def(
      "het_region",
      [](double eps1, double eps2, int x, int y) { return HetRegion({eps1, eps2, x, y}); },
      py::arg("eps1"), py::arg("eps2"), py::arg("x"), py::arg("y"),
      "Exact region of x eps1-DP composed with y eps2-DP mechanisms");

  m.def(
      "het_constraints",
      [](double eps1, double eps2, int x, int y) {
        return FromConstraints(HetConstraints({eps1, eps2, x, y}));
      },
      py::arg("eps1"), py::arg("eps2"), py::arg("x"), py::arg("y"));

  m.def(
      "compose_double",
      [](double eps1, double eps2, double delta1, double delta2, int k,
         const std::string& route) {
        DoubleDpSpec spec{eps1, eps2, delta1, delta2, k};
        if (route == "mixture" || route == "thm2") return ComposeDoubleMixture(spec);
        if (route == "direct" || route == "thm3") return ComposeDoubleDirect(spec);
        throw ValidationError("route must be 'direct' or 'mixture'");
      },
      py::arg("eps1"), py::arg("eps2"), py::arg("delta1"), py::arg("delta2"), py::arg("k"),
      py::arg("route") = "direct",
      "Exact k-fold region under two simultaneous DP constraints");

  m.def(
      "mixing_weight_alpha",
      [](double eps1, double eps2, double delta1, double delta2) {
        return MixingWeightAlpha({eps1, eps2, delta1, delta2, 1});
      },
      py::arg("eps1"), py::arg("eps2"), py::arg("delta1"), py::arg("delta2"));

  m.def(
      "compose_single",
      [](double eps, double delta, int k) { return ComposeSingle(eps, delta, k); },
      py::arg("eps"), py::arg("delta"), py::arg("k"),
      "Exact k-fold region of one (eps, delta)-DP constraint");

  m.def(
      "baselines",
      [](double eps1, double eps2, double delta1, double delta2, int k) {
        DoubleDpSpec spec{eps1, eps2, delta1, delta2, k};
        auto r2 = BaselineTotalVariation(spec);
        py::dict out;
        out["exact"] = ComposeDoubleDirect(spec);
        out["remark1"] = BaselineIntersection(spec);
        out["remark2"] = r2.region;
        out["remark2_fallback"] = r2.fell_back;
        out["eta"] = r2.eta;
        return out;
      },
      py::arg("eps1"), py::arg("eps2"), py::arg("delta1"), py::arg("delta2"), py::arg("k"),
      "Exact region plus the prior-work upper bounds");

  m.def(
      "gaussian_sandwich",
      [](double mu) {
        auto sw = Sandwich(GaussianTradeoff(mu));
        py::dict out;
        out["lower"] = FromConstraints(sw.lower);
        out["upper"] = FromConstraints(sw.upper);
        out["t_star_lower"] = sw.t_star_lower;
        out["t_star_upper"] = sw.t_star_upper;
        return out;
      },
      py::arg("mu"), "Optimal double-DP sandwich of the Gaussian trade-off curve");

  m.def(
      "gaussian_tradeoff",
      [](double mu, double t) { return GaussianTradeoff(mu).f(t); },
      py::arg("mu"), py::arg("t"), "G_mu evaluated at t");

  m.def(
      "np_tradeoff",
      [](const std::vector<double>& p0, const std::vector<double>& p1) {
        return NpTradeoff({p0, p1});
      },
      py::arg("p0"), py::arg("p1"),
      "Exact trade-off function of a finite test by Neyman-Pearson enumeration");

  m.def(
      "total_variation",
      [](const std::vector<double>& p0, const std::vector<double>& p1) {
        return TotalVariation({p0, p1});
      },
      py::arg("p0"), py::arg("p1"));
}

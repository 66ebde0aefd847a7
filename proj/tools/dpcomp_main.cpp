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

// Command-line front end: computes privacy regions, composition bounds and
// Gaussian sandwich approximations, emitting deterministic JSON on stdout
// and optional CSV boundary samples. Exit codes: 0 success, 1 usage error,
// 2 validation error, 3 verification failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dpcomp/conjugate.hpp"
#include "dpcomp/double_dp.hpp"
#include "dpcomp/fdp_approx.hpp"
#include "dpcomp/heterogeneous.hpp"
#include "dpcomp/normal.hpp"
#include "dpcomp/oracle.hpp"
#include "dpcomp/pwl.hpp"

namespace {

using dpcomp::DpConstraint;
using dpcomp::PrivacyRegion;
using dpcomp::TradeoffFunction;
using dpcomp::ValidationError;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerifyFailed = 3;

// Flag misuse distinct from semantic validation failures (exit 1 vs 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ----------------------------------------------------------------------
// Flat key=value config files. Keys repeat to accumulate (e.g. constraint).

class Config {
 public:
  static Config Load(const std::string& path) {
    Config cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw UsageError("config file not readable: " + path);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t\r"));
        auto last = s.find_last_not_of(" \t\r");
        s.erase(last == std::string::npos ? 0 : last + 1);
        return s;
      };
      std::string key = trim(line.substr(0, eq));
      std::string val = trim(line.substr(eq + 1));
      if (!key.empty()) cfg.values_[key].push_back(val);
    }
    return cfg;
  }

  // Applies the config value unless the flag was given on the command line.
  template <typename T>
  void Fill(const CLI::Option* opt, const std::string& key, T& var) const {
    if (opt != nullptr && opt->count() > 0) return;
    auto it = values_.find(key);
    if (it == values_.end() || it->second.empty()) return;
    std::istringstream is(it->second.back());
    is >> var;
    if (is.fail()) throw UsageError("config: cannot parse value for key '" + key + "'");
  }

  void Fill(const CLI::Option* opt, const std::string& key, std::string& var) const {
    if (opt != nullptr && opt->count() > 0) return;
    auto it = values_.find(key);
    if (it != values_.end() && !it->second.empty()) var = it->second.back();
  }

  void Fill(const CLI::Option* opt, const std::string& key,
            std::vector<std::string>& var) const {
    if (opt != nullptr && opt->count() > 0) return;
    auto it = values_.find(key);
    if (it != values_.end() && !it->second.empty()) var = it->second;
  }

 private:
  std::map<std::string, std::vector<std::string>> values_;
};

// ----------------------------------------------------------------------
// Small parsing helpers.

double ParseDouble(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + ": '" + s + "'");
  }
}

std::vector<double> ParseDoubleList(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ParseDouble(item, what));
  if (out.empty()) throw UsageError("empty value for " + what);
  return out;
}

DpConstraint ParseConstraint(const std::string& s) {
  auto vals = ParseDoubleList(s, "constraint");
  if (vals.size() != 2) throw UsageError("constraint must be EPS,DELTA: '" + s + "'");
  return {vals[0], vals[1]};
}

// ----------------------------------------------------------------------
// Report assembly.

json ConstraintListJson(const std::vector<DpConstraint>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(json{{"eps", c.eps}, {"delta", c.delta}});
  return arr;
}

json VerticesJson(const PrivacyRegion& r) {
  json arr = json::array();
  for (const auto& v : dpcomp::RegionVertices(r)) arr.push_back(json::array({v[0], v[1]}));
  return arr;
}

// Reads the supporting (eps, delta) pairs off the boundary pieces: a piece
// a*t + b with a <= -1 is the steep line of the constraint
// (ln(-a), 1 - b); shallower pieces are mirrors. An all-zero boundary is the
// full triangle R(0,1).
std::vector<DpConstraint> SupportingConstraints(const TradeoffFunction& f) {
  std::vector<DpConstraint> cs;
  for (const auto& p : f.Body().Pieces()) {
    if (p.slope <= -1.0 + 1e-12) {
      cs.push_back({std::max(0.0, std::log(-p.slope)),
                    std::clamp(1.0 - p.intercept, 0.0, 1.0)});
    }
  }
  if (cs.empty()) cs.push_back({0.0, 1.0});
  return cs;
}

void EmitCsv(const PrivacyRegion& r, int samples, const std::string& path) {
  if (samples < 2) throw UsageError("--samples must be >= 2");
  if (path.empty()) throw UsageError("--samples requires an output file (-o)");
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << "beta_i,beta_ii\n";
  char buf[64];
  for (int i = 0; i < samples; ++i) {
    double t = static_cast<double>(i) / (samples - 1);
    double v = r.Boundary()(t);
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", t, v);
    out << buf;
  }
}

json RegionBlock(const PrivacyRegion& r) {
  return json{{"constraints", ConstraintListJson(SupportingConstraints(r.Boundary()))},
              {"vertices", VerticesJson(r)}};
}

void PrintReport(const json& report) { std::cout << report.dump(2) << "\n"; }

// Max |f - g| over the union of breakpoints and endpoints.
double BoundaryResidual(const TradeoffFunction& f, const TradeoffFunction& g) {
  std::vector<double> grid = {0.0, 1.0};
  for (double b : f.Body().Breakpoints()) grid.push_back(b);
  for (double b : g.Body().Breakpoints()) grid.push_back(b);
  double worst = 0.0;
  for (double t : grid) {
    if (t < 0.0 || t > 1.0) continue;
    worst = std::max(worst, std::abs(f.Body().Value(t) - g.Body().Value(t)));
  }
  return worst;
}

std::string FormatResidual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", r);
  return buf;
}

// ----------------------------------------------------------------------
// Subcommand parameter bundles.

struct RegionParams {
  std::vector<std::string> constraints;
  int samples = 0;
  std::string out, config;
};

struct ComposeParams {
  std::string route = "thm3";
  std::string eps, delta;
  int k = 0, x = -1, y = -1;
  int samples = 0;
  std::string out, config;
};

struct ApproxParams {
  std::string curve;
  int k = 0;
  int samples = 101;
  std::string config;
};

struct VerifyParams {
  std::string eps, delta;
  int k = 0, x = -1, y = -1, grid = 1000;
  std::string config;
};

int RunRegion(RegionParams p, const CLI::Option* c_opt, const CLI::Option* s_opt,
              const CLI::Option* o_opt) {
  Config cfg = Config::Load(p.config);
  cfg.Fill(c_opt, "constraint", p.constraints);
  cfg.Fill(s_opt, "samples", p.samples);
  cfg.Fill(o_opt, "out", p.out);
  if (p.constraints.empty()) throw UsageError("at least one --constraint required");

  std::vector<DpConstraint> cs;
  for (const auto& s : p.constraints) cs.push_back(ParseConstraint(s));
  PrivacyRegion region = dpcomp::RegionFromConstraints(cs);
  auto active = SupportingConstraints(region.Boundary());

  json report;
  json in_cs = json::array();
  for (const auto& c : cs) in_cs.push_back(json::array({c.eps, c.delta}));
  report["inputs"] = {{"constraints", in_cs}};
  report["constraints"] = ConstraintListJson(active);
  report["vertices"] = VerticesJson(region);
  report["metadata"] = {{"route", "region"},
                        {"input_constraints", cs.size()},
                        {"active_constraints", active.size()},
                        {"pruned_constraints", cs.size() - active.size()}};
  PrintReport(report);
  if (p.samples > 0) EmitCsv(region, p.samples, p.out);
  return 0;
}

int RunCompose(ComposeParams p, CLI::App* sub) {
  Config cfg = Config::Load(p.config);
  cfg.Fill(sub->get_option("--route"), "route", p.route);
  cfg.Fill(sub->get_option("--eps"), "eps", p.eps);
  cfg.Fill(sub->get_option("--delta"), "delta", p.delta);
  cfg.Fill(sub->get_option("-k"), "k", p.k);
  cfg.Fill(sub->get_option("-x"), "x", p.x);
  cfg.Fill(sub->get_option("-y"), "y", p.y);
  cfg.Fill(sub->get_option("--samples"), "samples", p.samples);
  cfg.Fill(sub->get_option("--out"), "out", p.out);
  if (p.eps.empty()) throw UsageError("--eps is required");

  json report;
  std::optional<PrivacyRegion> region;
  json metadata;

  if (p.route == "het") {
    auto eps = ParseDoubleList(p.eps, "eps");
    if (eps.size() != 2) throw UsageError("route het needs --eps EPS1,EPS2");
    if (p.x < 0 || p.y < 0) throw UsageError("route het needs -x and -y");
    dpcomp::HetSpec spec{eps[0], eps[1], p.x, p.y};
    auto cons = dpcomp::HetConstraints(spec);
    region = dpcomp::RegionFromConstraints(cons);
    report["inputs"] = {{"route", "het"}, {"eps", json::array({eps[0], eps[1]})},
                        {"x", p.x},       {"y", p.y}};
    metadata = {{"route", "het"},
                {"enumerated_constraints", cons.size()}};
  } else if (p.route == "single") {
    double eps = ParseDouble(p.eps, "eps");
    double delta = p.delta.empty() ? 0.0 : ParseDouble(p.delta, "delta");
    if (p.k < 1) throw UsageError("route single needs -k >= 1");
    region = dpcomp::ComposeSingle(eps, delta, p.k);
    report["inputs"] = {{"route", "single"}, {"eps", eps}, {"delta", delta}, {"k", p.k}};
    metadata = {{"route", "single"}};
  } else if (p.route == "thm2" || p.route == "thm3") {
    auto eps = ParseDoubleList(p.eps, "eps");
    auto delta = p.delta.empty() ? std::vector<double>{0.0, 0.0}
                                 : ParseDoubleList(p.delta, "delta");
    if (eps.size() != 2 || delta.size() != 2) {
      throw UsageError("double routes need --eps EPS1,EPS2 and --delta D1,D2");
    }
    if (p.k < 1) throw UsageError("double routes need -k >= 1");
    dpcomp::DoubleDpSpec spec{eps[0], eps[1], delta[0], delta[1], p.k};
    report["inputs"] = {{"route", p.route},
                        {"eps", json::array({eps[0], eps[1]})},
                        {"delta", json::array({delta[0], delta[1]})},
                        {"k", p.k}};
    if (p.route == "thm2") {
      region = dpcomp::ComposeDoubleMixture(spec);
      metadata = {{"route", "thm2"}, {"components", spec.k + 1}};
    } else {
      int raw = 0;
      auto cons = dpcomp::DirectConstraints(spec, &raw);
      region = dpcomp::ComposeDoubleDirect(spec);
      metadata = {{"route", "thm3"}, {"enumerated_constraints", raw}};
    }
  } else {
    throw UsageError("unknown route '" + p.route + "' (expected thm2|thm3|het|single)");
  }

  auto active = SupportingConstraints(region->Boundary());
  report["constraints"] = ConstraintListJson(active);
  report["vertices"] = VerticesJson(*region);
  metadata["active_constraints"] = active.size();
  if (metadata.contains("enumerated_constraints")) {
    metadata["pruned_constraints"] =
        metadata["enumerated_constraints"].get<std::size_t>() - active.size();
  }
  report["metadata"] = metadata;
  PrintReport(report);
  if (p.samples > 0) EmitCsv(*region, p.samples, p.out);
  return 0;
}

int RunBaselines(ComposeParams p, CLI::App* sub) {
  Config cfg = Config::Load(p.config);
  cfg.Fill(sub->get_option("--eps"), "eps", p.eps);
  cfg.Fill(sub->get_option("--delta"), "delta", p.delta);
  cfg.Fill(sub->get_option("-k"), "k", p.k);
  if (p.eps.empty()) throw UsageError("--eps is required");
  auto eps = ParseDoubleList(p.eps, "eps");
  auto delta = p.delta.empty() ? std::vector<double>{0.0, 0.0}
                               : ParseDoubleList(p.delta, "delta");
  if (eps.size() != 2 || delta.size() != 2 || p.k < 1) {
    throw UsageError("baselines needs --eps EPS1,EPS2, --delta D1,D2, -k >= 1");
  }
  dpcomp::DoubleDpSpec spec{eps[0], eps[1], delta[0], delta[1], p.k};
  PrivacyRegion exact = dpcomp::ComposeDoubleDirect(spec);
  PrivacyRegion remark1 = dpcomp::BaselineIntersection(spec);
  auto remark2 = dpcomp::BaselineTotalVariation(spec);

  json report;
  report["inputs"] = {{"eps", json::array({eps[0], eps[1]})},
                      {"delta", json::array({delta[0], delta[1]})},
                      {"k", p.k}};
  report["exact"] = RegionBlock(exact);
  report["remark1"] = RegionBlock(remark1);
  report["remark2"] = RegionBlock(remark2.region);
  report["remark2"]["fallback"] = remark2.fell_back;
  report["remark2"]["eta"] = remark2.eta;
  report["metadata"] = {{"route", "baselines"}};
  PrintReport(report);
  return 0;
}

int RunApprox(ApproxParams p, CLI::App* sub) {
  Config cfg = Config::Load(p.config);
  cfg.Fill(sub->get_option("--curve"), "curve", p.curve);
  cfg.Fill(sub->get_option("-k"), "k", p.k);
  cfg.Fill(sub->get_option("--samples"), "samples", p.samples);
  if (p.curve.rfind("gdp:", 0) != 0) {
    throw UsageError("--curve must be gdp:MU");
  }
  double mu = ParseDouble(p.curve.substr(4), "mu");
  dpcomp::SmoothTradeoff curve = dpcomp::GaussianTradeoff(mu);
  dpcomp::SandwichResult sw = dpcomp::Sandwich(curve);

  json report;
  report["inputs"] = {{"curve", p.curve}, {"k", p.k}};
  report["lower"] = {{"constraints", ConstraintListJson(sw.lower)},
                     {"t_star", sw.t_star_lower},
                     {"root_ambiguous", sw.lower_root_ambiguous}};
  report["upper"] = {{"constraints", ConstraintListJson(sw.upper)},
                     {"t_star", sw.t_star_upper}};

  if (p.k > 0) {
    auto compose_pair = [&](const std::vector<DpConstraint>& cs) {
      if (cs.size() == 1) return dpcomp::ComposeSingle(cs[0].eps, cs[0].delta, p.k);
      auto sorted = cs;
      std::sort(sorted.begin(), sorted.end(),
                [](const DpConstraint& a, const DpConstraint& b) { return a.eps > b.eps; });
      dpcomp::DoubleDpSpec spec{sorted[0].eps, sorted[1].eps, sorted[0].delta,
                                sorted[1].delta, p.k};
      return dpcomp::ComposeDoubleDirect(spec);
    };
    PrivacyRegion lower_k = compose_pair(sw.lower);
    PrivacyRegion upper_k = compose_pair(sw.upper);
    dpcomp::SmoothTradeoff ref = dpcomp::GaussianTradeoff(mu * std::sqrt(p.k));
    json samples = json::array();
    int n = std::max(2, p.samples);
    for (int i = 0; i < n; ++i) {
      double t = static_cast<double>(i) / (n - 1);
      samples.push_back(json::array({t, ref.f(t)}));
    }
    report["composed"] = {{"k", p.k},
                          {"lower_vertices", VerticesJson(lower_k)},
                          {"upper_vertices", VerticesJson(upper_k)},
                          {"reference_samples", samples}};
  }
  report["metadata"] = {{"route", "approx"}};
  PrintReport(report);
  return 0;
}

int RunVerifyHet(VerifyParams p, CLI::App* sub) {
  Config cfg = Config::Load(p.config);
  cfg.Fill(sub->get_option("--eps"), "eps", p.eps);
  cfg.Fill(sub->get_option("-x"), "x", p.x);
  cfg.Fill(sub->get_option("-y"), "y", p.y);
  auto eps = ParseDoubleList(p.eps, "eps");
  if (eps.size() != 2 || p.x < 0 || p.y < 0) {
    throw UsageError("verify het needs --eps EPS1,EPS2, -x and -y");
  }
  dpcomp::HetSpec spec{eps[0], eps[1], p.x, p.y};
  PrivacyRegion region = dpcomp::HetRegion(spec);
  std::vector<dpcomp::DiscreteTest> tests;
  for (int i = 0; i < p.x; ++i) tests.push_back(dpcomp::RrTest(eps[0]));
  for (int i = 0; i < p.y; ++i) tests.push_back(dpcomp::RrTest(eps[1]));
  TradeoffFunction oracle = dpcomp::NpTradeoff(dpcomp::ProductTest(tests));
  double residual = BoundaryResidual(region.Boundary(), oracle);
  bool ok = residual <= 1e-10;
  std::cout << (ok ? "PASS" : "FAIL") << " het eps=(" << eps[0] << "," << eps[1] << ") x="
            << p.x << " y=" << p.y << " max_residual=" << FormatResidual(residual) << "\n";
  return ok ? 0 : kExitVerifyFailed;
}

int RunVerifyDouble(VerifyParams p, CLI::App* sub) {
  Config cfg = Config::Load(p.config);
  cfg.Fill(sub->get_option("--eps"), "eps", p.eps);
  cfg.Fill(sub->get_option("--delta"), "delta", p.delta);
  cfg.Fill(sub->get_option("-k"), "k", p.k);
  auto eps = ParseDoubleList(p.eps, "eps");
  auto delta = p.delta.empty() ? std::vector<double>{0.0, 0.0}
                               : ParseDoubleList(p.delta, "delta");
  if (eps.size() != 2 || delta.size() != 2 || p.k < 1) {
    throw UsageError("verify double needs --eps EPS1,EPS2, --delta D1,D2, -k >= 1");
  }
  dpcomp::DoubleDpSpec spec{eps[0], eps[1], delta[0], delta[1], p.k};
  PrivacyRegion direct = dpcomp::ComposeDoubleDirect(spec);
  PrivacyRegion mixture = dpcomp::ComposeDoubleMixture(spec);

  double alpha = dpcomp::MixingWeightAlpha(spec);
  std::vector<dpcomp::DiscreteTest> tests(
      p.k, dpcomp::DoubleDpTest(eps[0], eps[1], delta[0], alpha));
  TradeoffFunction oracle = dpcomp::NpTradeoff(dpcomp::ProductTest(tests));

  double oracle_residual = BoundaryResidual(direct.Boundary(), oracle);
  double route_residual = BoundaryResidual(direct.Boundary(), mixture.Boundary());
  bool ok = oracle_residual <= 1e-10 && route_residual <= 1e-9;
  std::cout << (ok ? "PASS" : "FAIL") << " double eps=(" << eps[0] << "," << eps[1]
            << ") delta=(" << delta[0] << "," << delta[1] << ") k=" << p.k
            << " oracle_residual=" << FormatResidual(oracle_residual)
            << " route_residual=" << FormatResidual(route_residual) << "\n";
  return ok ? 0 : kExitVerifyFailed;
}

int RunVerifyMixture(VerifyParams p, CLI::App* sub) {
  Config cfg = Config::Load(p.config);
  cfg.Fill(sub->get_option("--grid"), "grid", p.grid);
  if (p.grid < 100) throw UsageError("verify mixture needs --grid >= 100");
  std::vector<double> weights = {0.5, 0.5};
  std::vector<TradeoffFunction> fs = {dpcomp::MakeFEpsDelta({1.3, 0.0}),
                                      dpcomp::MakeFEpsDelta({0.5, 0.2})};
  TradeoffFunction fm = dpcomp::MixtureTradeoff({weights, fs});
  auto brute = dpcomp::MixtureBruteforce(weights, fs, p.grid);
  double max_slope = 0.0;
  for (const auto& f : fs) {
    for (const auto& piece : f.Body().Pieces()) {
      max_slope = std::max(max_slope, std::abs(piece.slope));
    }
  }
  double bound = max_slope / p.grid + 1e-12;
  double residual = 0.0;
  for (const auto& [t, v] : brute) residual = std::max(residual, std::abs(fm(t) - v));
  bool ok = residual <= bound;
  std::cout << (ok ? "PASS" : "FAIL") << " mixture grid=" << p.grid
            << " max_residual=" << FormatResidual(residual)
            << " bound=" << FormatResidual(bound) << "\n";
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* tol = std::getenv("DP_COMPOSER_TOL")) {
    try {
      dpcomp::SetCanonicalTol(ParseDouble(tol, "DP_COMPOSER_TOL"));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitValidation;
    }
  }

  CLI::App app{"Exact privacy regions for composed differentially private mechanisms"};
  app.require_subcommand(1);

  // region
  RegionParams region_params;
  auto* region = app.add_subcommand("region", "Intersection region of (eps,delta) constraints");
  auto* r_c = region->add_option("--constraint", region_params.constraints, "EPS,DELTA (repeatable)");
  auto* r_s = region->add_option("--samples", region_params.samples, "CSV sample count");
  auto* r_o = region->add_option("-o,--out", region_params.out, "CSV output path");
  region->add_option("--config", region_params.config, "flat key=value config file");

  // compose
  ComposeParams compose_params;
  auto* compose = app.add_subcommand("compose", "k-fold composition regions");
  compose->add_option("--route", compose_params.route, "thm2|thm3|het|single (default thm3)");
  compose->add_option("--eps", compose_params.eps, "EPS1,EPS2 (het/double) or EPS (single)");
  compose->add_option("--delta", compose_params.delta, "D1,D2 (double) or D (single)");
  compose->add_option("-k", compose_params.k, "number of compositions");
  compose->add_option("-x", compose_params.x, "eps1 mechanism count (het)");
  compose->add_option("-y", compose_params.y, "eps2 mechanism count (het)");
  compose->add_option("--samples", compose_params.samples, "CSV sample count");
  compose->add_option("-o,--out", compose_params.out, "CSV output path");
  compose->add_option("--config", compose_params.config, "flat key=value config file");

  // baselines
  ComposeParams baseline_params;
  auto* baselines = app.add_subcommand("baselines", "Exact region plus prior-work bounds");
  baselines->add_option("--eps", baseline_params.eps, "EPS1,EPS2");
  baselines->add_option("--delta", baseline_params.delta, "D1,D2");
  baselines->add_option("-k", baseline_params.k, "number of compositions");
  baselines->add_option("--config", baseline_params.config, "flat key=value config file");

  // approx
  ApproxParams approx_params;
  auto* approx = app.add_subcommand("approx", "Double-DP sandwich of a smooth trade-off curve");
  approx->add_option("--curve", approx_params.curve, "gdp:MU");
  approx->add_option("-k", approx_params.k, "also compose the sandwich k-fold");
  approx->add_option("--samples", approx_params.samples, "reference sample count (default 101)");
  approx->add_option("--config", approx_params.config, "flat key=value config file");

  // verify
  auto* verify = app.add_subcommand("verify", "Brute-force oracle equivalence checks");
  verify->require_subcommand(1);
  VerifyParams vhet_params, vdouble_params, vmix_params;
  auto* vhet = verify->add_subcommand("het", "heterogeneous region vs Neyman-Pearson oracle");
  vhet->add_option("--eps", vhet_params.eps, "EPS1,EPS2");
  vhet->add_option("-x", vhet_params.x, "eps1 mechanism count");
  vhet->add_option("-y", vhet_params.y, "eps2 mechanism count");
  vhet->add_option("--config", vhet_params.config, "config file");
  auto* vdouble = verify->add_subcommand("double", "double-DP composition vs oracle");
  vdouble->add_option("--eps", vdouble_params.eps, "EPS1,EPS2");
  vdouble->add_option("--delta", vdouble_params.delta, "D1,D2");
  vdouble->add_option("-k", vdouble_params.k, "number of compositions");
  vdouble->add_option("--config", vdouble_params.config, "config file");
  auto* vmix = verify->add_subcommand("mixture", "conjugate mixture vs grid brute force");
  vmix->add_option("--grid", vmix_params.grid, "grid resolution (default 1000)");
  vmix->add_option("--config", vmix_params.config, "config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (region->parsed()) return RunRegion(region_params, r_c, r_s, r_o);
    if (compose->parsed()) return RunCompose(compose_params, compose);
    if (baselines->parsed()) return RunBaselines(baseline_params, baselines);
    if (approx->parsed()) return RunApprox(approx_params, approx);
    if (verify->parsed()) {
      if (vhet->parsed()) return RunVerifyHet(vhet_params, vhet);
      if (vdouble->parsed()) return RunVerifyDouble(vdouble_params, vdouble);
      if (vmix->parsed()) return RunVerifyMixture(vmix_params, vmix);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

# Copyright 2026 The dpcomp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import dpcomp


def test_feps_delta_basics():
    f = dpcomp.feps_delta(math.log(2), 0.0)
    assert f(0.0) == pytest.approx(1.0)
    assert f(1.0 / 3.0) == pytest.approx(1.0 / 3.0)
    assert f.fixed_point() == pytest.approx(1.0 / 3.0, abs=1e-11)


def test_region_vertices():
    region = dpcomp.region_from_constraints([(0.0, 0.0)])
    assert region.vertices() == [(0.0, 1.0), (1.0, 0.0)]


def test_validation_error_maps_to_value_error():
    with pytest.raises(ValueError):
        dpcomp.feps_delta(-1.0, 0.0)


def test_het_region_matches_oracle_tv():
    cons = dpcomp.het_constraints(math.log(2), math.log(2), 2, 0)
    assert cons[0][0] == pytest.approx(2 * math.log(2))
    assert cons[-1][1] == pytest.approx(1.0 / 3.0)


def test_compose_double_routes_agree():
    kwargs = dict(eps1=0.3, eps2=0.15, delta1=0.0, delta2=0.02, k=3)
    direct = dpcomp.compose_double(route="direct", **kwargs)
    mixture = dpcomp.compose_double(route="mixture", **kwargs)
    assert dpcomp.leq(direct.boundary, mixture.boundary, 1e-9)
    assert dpcomp.leq(mixture.boundary, direct.boundary, 1e-9)


def test_compose_double_validates_assumption():
    with pytest.raises(ValueError):
        dpcomp.compose_double(0.3, 0.15, 0.5, 0.02, 2)


def test_mixture_tradeoff_weights():
    f1 = dpcomp.feps_delta(1.3, 0.0)
    f2 = dpcomp.feps_delta(0.5, 0.2)
    fm = dpcomp.mixture_tradeoff([0.5, 0.5], [f1, f2])
    assert fm(0.0) == pytest.approx(0.9, abs=1e-12)


def test_np_tradeoff_randomized_response():
    e = math.exp(0.3)
    f = dpcomp.np_tradeoff([e / (e + 1), 1 / (e + 1)], [1 / (e + 1), e / (e + 1)])
    g = dpcomp.feps_delta(0.3, 0.0)
    for t in (0.0, 0.2, 0.5, 0.9):
        assert f(t) == pytest.approx(g(t), abs=1e-14)


def test_gaussian_sandwich_brackets_curve():
    sw = dpcomp.gaussian_sandwich(1.0)
    lower = dpcomp.region_from_constraints(sw["lower"]).boundary
    upper = dpcomp.region_from_constraints(sw["upper"]).boundary
    for i in range(101):
        t = i / 100.0
        g = dpcomp.gaussian_tradeoff(1.0, t)
        assert lower(t) <= g + 1e-9
        assert upper(t) >= g - 1e-9
    assert all(eps > 0 for eps, _ in sw["lower"])


def test_baselines_nest():
    out = dpcomp.baselines(0.3, 0.15, 0.0, 0.02, 3)
    exact = out["exact"].boundary
    r1 = out["remark1"].boundary
    r2 = out["remark2"].boundary
    assert dpcomp.leq(r2, exact, 1e-10)
    assert dpcomp.leq(r1, r2, 1e-10)
    assert not out["remark2_fallback"]

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

"""Exact privacy regions for composed differentially private mechanisms."""

from dpcomp._core import (
    PrivacyRegion,
    TradeoffFunction,
    ValidationError,
    baselines,
    compose_double,
    compose_single,
    feps_delta,
    gaussian_sandwich,
    gaussian_tradeoff,
    het_constraints,
    het_region,
    leq,
    mixing_weight_alpha,
    mixture_tradeoff,
    np_tradeoff,
    pointwise_max,
    region_from_constraints,
    total_variation,
)

__all__ = [
    "PrivacyRegion",
    "TradeoffFunction",
    "ValidationError",
    "baselines",
    "compose_double",
    "compose_single",
    "feps_delta",
    "gaussian_sandwich",
    "gaussian_tradeoff",
    "het_constraints",
    "het_region",
    "leq",
    "mixing_weight_alpha",
    "mixture_tradeoff",
    "np_tradeoff",
    "pointwise_max",
    "region_from_constraints",
    "total_variation",
]

__version__ = "0.1.0"

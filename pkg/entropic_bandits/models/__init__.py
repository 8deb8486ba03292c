# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Models for entropic-risk bandit instances, posteriors, results and reports."""

# Local/package imports
from entropic_bandits.models.base import BanditBaseModel
from entropic_bandits.models.config import ExperimentConfig, OutputConfig, PolicyConfig
from entropic_bandits.models.instance import ArmSpec, BanditInstance
from entropic_bandits.models.posterior import PosteriorSample, PosteriorState
from entropic_bandits.models.results import (
    AggregateResult,
    ComparisonRow,
    PolicyDecision,
    PullRateRow,
    RunResult,
)
from entropic_bandits.models.summary import PolicySummary, SimulationSummary
from entropic_bandits.models.theory import (
    SCHEMA_VERSION,
    ArmTheory,
    RConstant,
    TheoryReport,
    WitnessResult,
    XiGammaResult,
    XiPolicy,
)

__all__ = [
    "BanditBaseModel",
    "ArmSpec",
    "BanditInstance",
    "PosteriorState",
    "PosteriorSample",
    "PolicyDecision",
    "RunResult",
    "AggregateResult",
    "ComparisonRow",
    "PullRateRow",
    "PolicySummary",
    "SimulationSummary",
    "SCHEMA_VERSION",
    "XiPolicy",
    "RConstant",
    "XiGammaResult",
    "WitnessResult",
    "ArmTheory",
    "TheoryReport",
    "ExperimentConfig",
    "PolicyConfig",
    "OutputConfig",
]

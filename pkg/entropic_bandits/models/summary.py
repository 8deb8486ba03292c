# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""The JSON summary written by a simulate run."""

# Standard library imports
from typing import Dict, Tuple

# Third-party imports
from pydantic import Field

# Local/package imports
from entropic_bandits.models.base import BanditBaseModel
from entropic_bandits.models.config import ExperimentConfig
from entropic_bandits.models.results import AggregateResult, ComparisonRow, PullRateRow
from entropic_bandits.models.theory import SCHEMA_VERSION, TheoryReport


class PolicySummary(BanditBaseModel):
    """Final-round statistics of one simulated policy."""

    policy: str
    n_runs: int = Field(ge=1)
    horizon: int = Field(ge=1)
    final_mean_regret: float
    final_std_regret: float
    mean_pull_fractions: Tuple[float, ...]
    regret_over_log_n: Dict[int, float]

    @classmethod
    def from_aggregate(cls, aggregate: AggregateResult) -> "PolicySummary":
        """Summarize an aggregate without its per-round trajectories."""
        return cls(
            policy=aggregate.policy,
            n_runs=aggregate.n_runs,
            horizon=aggregate.horizon,
            final_mean_regret=float(aggregate.mean_regret_trajectory[-1]),
            final_std_regret=float(aggregate.std_regret_trajectory[-1]),
            mean_pull_fractions=tuple(float(v) for v in aggregate.mean_pull_fractions),
            regret_over_log_n=dict(aggregate.regret_over_log_n),
        )


class SimulationSummary(BanditBaseModel):
    """Configuration, theory report and empirical results of one experiment."""

    schema_version: str = SCHEMA_VERSION
    config: ExperimentConfig
    theory: TheoryReport
    policies: Tuple[PolicySummary, ...]
    comparison: Tuple[ComparisonRow, ...]
    pull_rates: Tuple[PullRateRow, ...]

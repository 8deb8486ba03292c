# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Result models for decisions, episodes, Monte Carlo aggregates and comparisons."""

# Standard library imports
from typing import Dict, Optional, Tuple

# Third-party imports
import numpy as np

from pydantic import Field, model_validator

# Local/package imports
from entropic_bandits.models.base import BanditBaseModel

# Absolute slack for sums of averaged fractions and running means
FRACTION_ATOL = 1e-9


class PolicyDecision(BanditBaseModel):
    """The arm a policy plays in one round and the per-arm scores behind it.

    ``diagnostic`` holds the sampled (or plug-in) entropic risk of every arm;
    ``arm_index`` is the position of its minimum, lowest index on ties.
    """

    arm_index: int = Field(ge=0)
    diagnostic: Tuple[float, ...]

    @model_validator(mode="after")
    def _check_argmin(self) -> "PolicyDecision":
        if self.arm_index >= len(self.diagnostic):
            raise ValueError("arm_index out of range of diagnostic")
        if self.arm_index != int(np.argmin(self.diagnostic)):
            raise ValueError("arm_index must be the argmin of diagnostic")
        return self


class RunResult(BanditBaseModel):
    """Outcome of a single episode.

    Attributes:
        policy: Registered policy name
        pulls: Per-arm pull counts T_{i,n}
        choices: Arm played in each round, length n
        regret_trajectory: Cumulative pseudo-regret after each round, length n
        seed: Root seed the episode stream was split from
        run_index: Position of the run under the root seed
    """

    policy: str
    pulls: np.ndarray
    choices: np.ndarray
    regret_trajectory: np.ndarray
    seed: int = Field(ge=0, lt=2**64)
    run_index: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_counts(self) -> "RunResult":
        n = self.choices.size
        if self.regret_trajectory.size != n:
            raise ValueError("regret_trajectory must have one entry per round")
        if n and (self.choices.min() < 0 or self.choices.max() >= self.pulls.size):
            raise ValueError("choices must index an arm")
        if int(self.pulls.sum()) != n:
            raise ValueError("pull counts must sum to the number of rounds")
        counts = np.bincount(self.choices, minlength=self.pulls.size)
        if not np.array_equal(counts, self.pulls):
            raise ValueError("pull counts must match the choices")
        if np.any(np.diff(self.regret_trajectory) < 0.0):
            raise ValueError("regret_trajectory must be non-decreasing")
        return self

    @property
    def horizon(self) -> int:
        """Number of rounds played."""
        return int(self.choices.size)

    def fingerprint(self) -> bytes:
        """Bytes that identify the run exactly, for determinism checks."""
        return b"".join(
            (
                self.pulls.astype(np.int64).tobytes(),
                self.choices.astype(np.int64).tobytes(),
                self.regret_trajectory.astype(np.float64).tobytes(),
            )
        )


class AggregateResult(BanditBaseModel):
    """Monte Carlo estimate of a policy's regret on one instance.

    Attributes:
        policy: Registered policy name
        mean_regret_trajectory: Per-round mean cumulative pseudo-regret
        std_regret_trajectory: Per-round population standard deviation
        mean_pull_fractions: Per-arm mean of T_{i,n} / n, sums to 1
        n_runs: Number of episodes aggregated
        regret_over_log_n: Mean regret divided by log n at each checkpoint
        mean_pulls_at_checkpoint: Per-arm mean pull counts at each checkpoint
    """

    policy: str
    mean_regret_trajectory: np.ndarray
    std_regret_trajectory: np.ndarray
    mean_pull_fractions: np.ndarray
    n_runs: int = Field(ge=1)
    regret_over_log_n: Dict[int, float] = {}
    mean_pulls_at_checkpoint: Dict[int, Tuple[float, ...]] = {}

    @model_validator(mode="after")
    def _check_shapes(self) -> "AggregateResult":
        if self.std_regret_trajectory.shape != self.mean_regret_trajectory.shape:
            raise ValueError("mean and std trajectories must have the same length")
        total = float(self.mean_pull_fractions.sum())
        if abs(total - 1.0) > FRACTION_ATOL:
            raise ValueError("mean_pull_fractions must sum to 1")
        # Running means of non-decreasing runs may drift by rounding only
        peak = float(np.max(np.abs(self.mean_regret_trajectory), initial=0.0))
        scale = max(1.0, peak)
        if np.any(np.diff(self.mean_regret_trajectory) < -FRACTION_ATOL * scale):
            raise ValueError("mean_regret_trajectory must be non-decreasing")
        return self

    @property
    def horizon(self) -> int:
        """Number of rounds in every aggregated episode."""
        return int(self.mean_regret_trajectory.size)


class ComparisonRow(BanditBaseModel):
    """One row of the regret-versus-theory table."""

    policy: str
    n: int
    mean_regret: float
    std_regret: float
    regret_over_log_n: float
    theory_upper: Optional[float] = None
    theory_lower: Optional[float] = None


class PullRateRow(BanditBaseModel):
    """Mean pulls of a suboptimal arm per log n next to its constant R_i."""

    policy: str
    arm_index: int
    n: int
    pulls_over_log_n: float
    r_constant: Optional[float] = None

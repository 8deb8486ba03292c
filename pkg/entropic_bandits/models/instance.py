# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Arm and bandit instance models.

An instance is a list of Gaussian arms, a risk-aversion parameter gamma and
a variance cap. Construction validates everything the theory relies on,
including the uniqueness of the arm with minimum entropic risk.
"""

# Standard library imports
import math

from typing import List, Sequence, Tuple

# Third-party imports
from pydantic import Field, field_validator, model_validator

# Local/package imports
from entropic_bandits.models.base import BanditBaseModel
from entropic_bandits.risk import er_gaussian

# Distance below which two entropic risks count as a tie, relative to the
# spread of the risks and never below an absolute 1e-12
TIE_TOLERANCE = 1e-12


class ArmSpec(BanditBaseModel):
    """True Gaussian parameters of one arm."""

    mean: float
    variance: float = Field(gt=0.0)

    @field_validator("mean", "variance")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("must be finite")
        return value

    @property
    def std(self) -> float:
        """Standard deviation of the arm."""
        return math.sqrt(self.variance)

    def entropic_risk(self, gamma: float) -> float:
        """Return the closed-form entropic risk of this arm at ``gamma``."""
        return er_gaussian(self.mean, self.variance, gamma)


class BanditInstance(BanditBaseModel):
    """K Gaussian arms with a risk parameter and a variance cap.

    Invariants enforced at construction:
    - at least two arms
    - gamma > 0 and sigma_max_sq > 1
    - every arm variance is at most sigma_max_sq
    - exactly one arm attains the minimum entropic risk
    """

    arms: Tuple[ArmSpec, ...] = Field(min_length=2)
    gamma: float = Field(gt=0.0)
    sigma_max_sq: float = Field(gt=1.0)

    @field_validator("gamma", "sigma_max_sq")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("must be finite")
        return value

    @model_validator(mode="after")
    def _check_arms(self) -> "BanditInstance":
        for index, arm in enumerate(self.arms):
            if arm.variance > self.sigma_max_sq:
                raise ValueError(
                    f"arm {index} variance {arm.variance} exceeds "
                    f"sigma_max_sq {self.sigma_max_sq}"
                )
        risks = sorted(self.entropic_risks)
        scale = max(1.0, risks[-1] - risks[0])
        if risks[1] - risks[0] <= TIE_TOLERANCE * scale:
            raise ValueError(
                "optimal arm is not unique: two arms share the minimum entropic risk"
            )
        return self

    @classmethod
    def gaussian(
        cls,
        means: Sequence[float],
        variances: Sequence[float],
        gamma: float,
        sigma_max_sq: float,
    ) -> "BanditInstance":
        """
        Build an instance from parallel lists of means and variances.

        Args:
            means: Arm means
            variances: Arm variances, same length as ``means``
            gamma: Risk-aversion parameter
            sigma_max_sq: Variance cap of the instance class

        Returns:
            The validated instance
        """
        if len(means) != len(variances):
            raise ValueError("means and variances must have the same length")
        arms = tuple(ArmSpec(mean=m, variance=v) for m, v in zip(means, variances))
        return cls(arms=arms, gamma=gamma, sigma_max_sq=sigma_max_sq)

    @property
    def n_arms(self) -> int:
        """Number of arms K."""
        return len(self.arms)

    @property
    def entropic_risks(self) -> List[float]:
        """Entropic risk of every arm, in arm order."""
        return [arm.entropic_risk(self.gamma) for arm in self.arms]

    @property
    def optimal_arm(self) -> int:
        """Index of the unique arm with minimum entropic risk."""
        risks = self.entropic_risks
        return min(range(len(risks)), key=risks.__getitem__)

    def suboptimal_arms(self) -> List[int]:
        """Indices of every arm except the optimal one, in order."""
        best = self.optimal_arm
        return [i for i in range(self.n_arms) if i != best]

    def with_gamma(self, gamma: float) -> "BanditInstance":
        """Return the same arms under a different risk parameter."""
        return BanditInstance(
            arms=self.arms, gamma=gamma, sigma_max_sq=self.sigma_max_sq
        )

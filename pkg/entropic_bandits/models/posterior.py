# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Normal-Gamma posterior state and posterior samples."""

# Standard library imports
import math

# Third-party imports
from pydantic import Field, model_validator

# Local/package imports
from entropic_bandits.models.base import BanditBaseModel

# Prior used by ERTS for every arm: (mu_hat, T, alpha, beta) = (0, 0, 1/2, 1/2)
PRIOR_ALPHA = 0.5
PRIOR_BETA = 0.5


class PosteriorState(BanditBaseModel):
    """The four Normal-Gamma parameters tracked per arm.

    Attributes:
        mu_hat: Posterior mean estimate
        t_count: Number of samples seen (T)
        alpha: Gamma shape, always PRIOR_ALPHA + t_count / 2
        beta: Gamma rate, at least PRIOR_BETA and non-decreasing over updates
    """

    mu_hat: float = 0.0
    t_count: int = Field(default=0, ge=0)
    alpha: float = Field(default=PRIOR_ALPHA, gt=0.0)
    beta: float = Field(default=PRIOR_BETA, gt=0.0)

    @model_validator(mode="after")
    def _check_invariants(self) -> "PosteriorState":
        if not (math.isfinite(self.mu_hat) and math.isfinite(self.beta)):
            raise ValueError("posterior parameters must be finite")
        if self.alpha != PRIOR_ALPHA + self.t_count / 2:
            raise ValueError("alpha must equal 1/2 + t_count/2")
        if self.beta < PRIOR_BETA:
            raise ValueError("beta must be at least 1/2")
        if self.t_count == 0 and self.mu_hat != 0.0:
            raise ValueError("mu_hat must be 0 before any sample")
        return self

    @classmethod
    def prior(cls) -> "PosteriorState":
        """Return the initial state (0, 0, 1/2, 1/2)."""
        return cls()

    @property
    def precision_estimate(self) -> float:
        """Posterior mean of the precision, alpha / beta."""
        return self.alpha / self.beta


class PosteriorSample(BanditBaseModel):
    """One draw (theta, kappa) from an arm's posterior."""

    theta: float
    kappa: float = Field(gt=0.0)

    def entropic_risk(self, gamma: float) -> float:
        """Sampled entropic risk -theta + gamma / (2 kappa)."""
        return -self.theta + gamma / (2.0 * self.kappa)

# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Entropic Risk Thompson Sampling."""

# Standard library imports
from typing import Sequence

# Third-party imports
import numpy as np

# Local/package imports
from entropic_bandits.models.instance import BanditInstance
from entropic_bandits.models.posterior import PosteriorState
from entropic_bandits.models.results import PolicyDecision, RunResult
from entropic_bandits.policies.base import Policy, argmin_decision, register_policy
from entropic_bandits.policies.episode import run_episode
from entropic_bandits.posterior import sample_posterior


@register_policy("erts")
class ErtsPolicy(Policy):
    """
    Play the arm whose posterior sample has the lowest entropic risk.

    Each round draws (theta, kappa) from every arm's Normal-Gamma posterior,
    in arm order, and scores the arm with -theta + gamma / (2 kappa).
    """

    def choose(
        self, states: Sequence[PosteriorState], rng: np.random.Generator
    ) -> PolicyDecision:
        scores = [
            sample_posterior(state, rng).entropic_risk(self.gamma) for state in states
        ]
        return argmin_decision(scores)


def erts_choose(
    states: Sequence[PosteriorState], gamma: float, rng: np.random.Generator
) -> PolicyDecision:
    """
    One ERTS decision.

    Raises:
        PreconditionError: If some arm has never been played
    """
    return ErtsPolicy(gamma).choose(states, rng)


def erts_episode(
    instance: BanditInstance,
    horizon: int,
    rng: np.random.Generator,
    seed: int = 0,
    run_index: int = 0,
) -> RunResult:
    """Run a full ERTS episode on ``instance``."""
    return run_episode(
        instance, ErtsPolicy(instance.gamma), horizon, rng, seed, run_index
    )

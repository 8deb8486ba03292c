# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""
Comparison baselines.

The plug-in entropic risk of an arm replaces the unknown variance with
the inverse of the posterior-mean precision alpha / beta:
-mu_hat + gamma * beta / (2 alpha).
"""

# Standard library imports
import math

from typing import Any, Dict, List, Optional, Sequence

# Third-party imports
import numpy as np

# Local/package imports
from entropic_bandits.exceptions import DomainError
from entropic_bandits.models.posterior import PosteriorState
from entropic_bandits.models.results import PolicyDecision
from entropic_bandits.policies.base import (
    Policy,
    argmin_decision,
    build_policy,
    one_hot_decision,
    register_policy,
)

BASELINE_KINDS = ("uniform", "epsilon_greedy_er", "ftl_er")


def plug_in_risks(states: Sequence[PosteriorState], gamma: float) -> List[float]:
    """Plug-in entropic risk of every arm."""
    return [
        -state.mu_hat + gamma / (2.0 * state.precision_estimate) for state in states
    ]


@register_policy("uniform")
class UniformPolicy(Policy):
    """Play an arm chosen uniformly at random."""

    def choose(
        self, states: Sequence[PosteriorState], rng: np.random.Generator
    ) -> PolicyDecision:
        return one_hot_decision(int(rng.integers(len(states))), len(states))


@register_policy("epsilon_greedy_er")
class EpsilonGreedyErPolicy(Policy):
    """
    Explore uniformly with probability epsilon, otherwise follow the plug-in ER.

    One uniform draw decides exploration each round; an exploring round
    then draws the arm.
    """

    def __init__(self, gamma: float, epsilon: float = 0.1):
        """
        Initialize the policy.

        Args:
            gamma: Risk-aversion parameter, > 0
            epsilon: Exploration probability in [0, 1]

        Raises:
            DomainError: If epsilon is outside [0, 1]
        """
        super().__init__(gamma)
        if not (math.isfinite(epsilon) and 0.0 <= epsilon <= 1.0):
            raise DomainError(f"epsilon must lie in [0, 1], got {epsilon!r}")
        self.epsilon = float(epsilon)

    @property
    def params(self) -> Dict[str, Any]:
        return {"epsilon": self.epsilon}

    def choose(
        self, states: Sequence[PosteriorState], rng: np.random.Generator
    ) -> PolicyDecision:
        if rng.random() < self.epsilon:
            return one_hot_decision(int(rng.integers(len(states))), len(states))
        return argmin_decision(plug_in_risks(states, self.gamma))


@register_policy("ftl_er")
class FtlErPolicy(EpsilonGreedyErPolicy):
    """Follow the leader on the plug-in ER: epsilon-greedy with epsilon = 0."""

    def __init__(self, gamma: float):
        super().__init__(gamma, epsilon=0.0)

    @property
    def params(self) -> Dict[str, Any]:
        return {}


def baseline_choose(
    kind: str,
    states: Sequence[PosteriorState],
    gamma: float,
    rng: np.random.Generator,
    epsilon: Optional[float] = None,
) -> PolicyDecision:
    """
    One decision of a baseline policy.

    Args:
        kind: One of ``uniform``, ``epsilon_greedy_er`` or ``ftl_er``
        states: Posterior state of every arm
        gamma: Risk-aversion parameter
        rng: Random stream
        epsilon: Exploration probability, used by ``epsilon_greedy_er`` only

    Returns:
        The decision

    Raises:
        DomainError: For an unknown kind or an invalid epsilon
    """
    if kind not in BASELINE_KINDS:
        raise DomainError(f"unknown baseline {kind!r}, expected one of {BASELINE_KINDS}")
    params: Dict[str, Any] = {}
    if kind == "epsilon_greedy_er" and epsilon is not None:
        params["epsilon"] = epsilon
    return build_policy(kind, gamma, **params).choose(states, rng)

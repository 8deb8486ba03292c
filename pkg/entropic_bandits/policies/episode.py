# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""
The episode loop shared by every policy.

Rounds 1..K play each arm once; every later round asks the policy for an
arm, draws a reward from that arm's true Gaussian and folds it into the
arm's posterior. The policy's draws always come before the reward draw in
a round.
"""

# Standard library imports
import logging

# Third-party imports
import numpy as np

from opentelemetry import trace

# Local/package imports
from entropic_bandits.exceptions import DomainError
from entropic_bandits.models.instance import BanditInstance
from entropic_bandits.models.posterior import PosteriorState
from entropic_bandits.models.results import RunResult
from entropic_bandits.policies.base import Policy
from entropic_bandits.posterior import update
from entropic_bandits.risk import er_gap

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)


@tracer.start_as_current_span("Episode.run")
def run_episode(
    instance: BanditInstance,
    policy: Policy,
    horizon: int,
    rng: np.random.Generator,
    seed: int = 0,
    run_index: int = 0,
) -> RunResult:
    """
    Play one episode of ``horizon`` rounds.

    Args:
        instance: The bandit instance rewards are drawn from
        policy: Decision rule for rounds after the forced exploration
        horizon: Number of rounds, at least the number of arms
        rng: Random stream owned by this episode
        seed: Root seed recorded on the result
        run_index: Run index recorded on the result

    Returns:
        Pull counts, choices and the cumulative pseudo-regret trajectory

    Raises:
        DomainError: If horizon is smaller than the number of arms
    """
    n_arms = instance.n_arms
    if horizon < n_arms:
        raise DomainError(f"horizon {horizon} is smaller than the {n_arms} arms")
    span = trace.get_current_span()
    span.set_attribute("run.horizon", horizon)
    span.set_attribute("run.index", run_index)
    span.set_attribute("policy.name", policy.name)

    means = [arm.mean for arm in instance.arms]
    stds = [arm.std for arm in instance.arms]
    states = [PosteriorState.prior() for _ in range(n_arms)]
    choices = np.empty(horizon, dtype=np.int64)
    for t in range(horizon):
        if t < n_arms:
            arm = t
        else:
            arm = policy.choose(states, rng).arm_index
        reward = float(rng.normal(means[arm], stds[arm]))
        states[arm] = update(states[arm], reward)
        choices[t] = arm

    gaps = np.array([er_gap(instance, i) for i in range(n_arms)], dtype=np.float64)
    pulls = np.bincount(choices, minlength=n_arms).astype(np.int64)
    result = RunResult(
        policy=policy.name,
        pulls=pulls,
        choices=choices,
        regret_trajectory=np.cumsum(gaps[choices]),
        seed=seed,
        run_index=run_index,
    )
    logger.debug(
        "Episode finished",
        extra={
            "policy": policy.name,
            "run_index": run_index,
            "pulls": pulls.tolist(),
            "regret": float(result.regret_trajectory[-1]),
        },
    )
    return result

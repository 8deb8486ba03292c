# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Normal-Gamma posterior update, batch oracle and posterior sampling.

The sequential update follows the conjugate recursion used by ERTS::

    mu'    = T/(T+1) * mu + x/(T+1)
    T'     = T + 1
    alpha' = alpha + 1/2
    beta'  = beta + T/(T+1) * (x - mu)^2 / 2

Sampling draws kappa ~ Gamma(shape=alpha, rate=beta) first and then
theta ~ N(mu, 1/T). The mean draw deliberately uses 1/T rather than the
full conditional 1/(kappa T).
"""

# Standard library imports
import math

from typing import Optional, Sequence

# Third-party imports
import numpy as np

# Local/package imports
from entropic_bandits.exceptions import DomainError, PreconditionError
from entropic_bandits.models.posterior import (
    PRIOR_ALPHA,
    PRIOR_BETA,
    PosteriorSample,
    PosteriorState,
)


def update(state: PosteriorState, x: float) -> PosteriorState:
    """
    Fold one observed reward into an arm's posterior.

    Args:
        state: Current posterior state (not mutated)
        x: Observed reward

    Returns:
        The updated posterior state

    Raises:
        DomainError: If x is not finite
    """
    if not math.isfinite(x):
        raise DomainError(f"observation must be finite, got {x!r}")
    t = state.t_count
    weight = t / (t + 1.0)
    deviation = x - state.mu_hat
    # Derived from an already validated state, so skip re-validation
    return PosteriorState.model_construct(
        mu_hat=weight * state.mu_hat + x / (t + 1.0),
        t_count=t + 1,
        alpha=state.alpha + 0.5,
        beta=state.beta + weight * deviation * deviation / 2.0,
    )


def fold_updates(
    samples: Sequence[float], state: Optional[PosteriorState] = None
) -> PosteriorState:
    """Apply ``update`` to every sample in order, starting from the prior."""
    current = PosteriorState.prior() if state is None else state
    for x in samples:
        current = update(current, float(x))
    return current


def batch_posterior(samples: Sequence[float]) -> PosteriorState:
    """
    Posterior after observing ``samples`` from the prior, computed in bulk.

    Independent of ``update``: the mean and centred sum of squares come from
    numpy's pairwise summation.

    Args:
        samples: Observed rewards (may be empty)

    Returns:
        (mean, n, 1/2 + n/2, 1/2 + sum((x - mean)^2) / 2)
    """
    values = np.asarray(samples, dtype=np.float64).ravel()
    n = int(values.size)
    if n == 0:
        return PosteriorState.prior()
    if not np.all(np.isfinite(values)):
        raise DomainError("samples must be finite")
    mean = float(values.mean())
    centred = values - mean
    sum_sq = float(np.dot(centred, centred))
    return PosteriorState(
        mu_hat=mean,
        t_count=n,
        alpha=PRIOR_ALPHA + n / 2,
        beta=PRIOR_BETA + sum_sq / 2.0,
    )


def sample_posterior(state: PosteriorState, rng: np.random.Generator) -> PosteriorSample:
    """
    Draw (theta, kappa) from an arm's posterior.

    The stream is consumed in a fixed order: kappa first, then theta.

    Args:
        state: Posterior of an arm that has been played at least once
        rng: Random stream owned by the calling episode

    Returns:
        The posterior sample

    Raises:
        PreconditionError: If the arm has never been played
    """
    if state.t_count < 1:
        raise PreconditionError("cannot sample the posterior of an unplayed arm")
    kappa = float(rng.gamma(state.alpha, 1.0 / state.beta))
    theta = float(rng.normal(state.mu_hat, 1.0 / math.sqrt(state.t_count)))
    return PosteriorSample(theta=theta, kappa=kappa)

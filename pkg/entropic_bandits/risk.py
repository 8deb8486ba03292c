# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Entropic risk, gaps and Gaussian KL divergence.

Samples are rewards throughout: the entropic risk of X is
(1/gamma) log E[exp(-gamma X)], which for N(mu, sigma^2) is
-mu + (gamma/2) sigma^2. Lower is better.
"""

# Standard library imports
import math

from typing import TYPE_CHECKING, Sequence

# Third-party imports
import numpy as np

from scipy.special import logsumexp

# Local/package imports
from entropic_bandits.exceptions import DomainError

if TYPE_CHECKING:
    # Local/package imports
    from entropic_bandits.models.instance import ArmSpec, BanditInstance


def _require_positive(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be finite and > 0, got {value!r}")


def er_gaussian(mean: float, variance: float, gamma: float) -> float:
    """
    Closed-form entropic risk of a Gaussian reward.

    Args:
        mean: Reward mean
        variance: Reward variance, > 0
        gamma: Risk-aversion parameter, > 0

    Returns:
        -mean + (gamma / 2) * variance

    Raises:
        DomainError: If variance or gamma is non-finite or non-positive
    """
    _require_positive("variance", variance)
    _require_positive("gamma", gamma)
    if not math.isfinite(mean):
        raise DomainError(f"mean must be finite, got {mean!r}")
    return -mean + 0.5 * gamma * variance


def er_empirical(samples: Sequence[float], gamma: float) -> float:
    """
    Sample analogue of the entropic risk, (1/gamma) log mean(exp(-gamma x)).

    The log-mean-exp is evaluated with a max shift, so it cannot overflow.

    Args:
        samples: Observed rewards, non-empty
        gamma: Risk-aversion parameter, > 0

    Returns:
        The empirical entropic risk

    Raises:
        DomainError: If samples is empty or gamma is invalid
    """
    _require_positive("gamma", gamma)
    values = np.asarray(samples, dtype=np.float64)
    if values.size == 0:
        raise DomainError("er_empirical requires at least one sample")
    if not np.all(np.isfinite(values)):
        raise DomainError("samples must be finite")
    exponent = -gamma * values.ravel()
    return float((logsumexp(exponent) - math.log(exponent.size)) / gamma)


def er_gap(instance: "BanditInstance", arm_index: int) -> float:
    """
    Entropic-risk gap of an arm relative to the optimal arm.

    Args:
        instance: The bandit instance
        arm_index: Index of the arm

    Returns:
        ER(arm) - min over arms of ER; 0 exactly for the optimal arm

    Raises:
        IndexError: If arm_index is out of range
    """
    if not 0 <= arm_index < instance.n_arms:
        raise IndexError(f"arm index {arm_index} out of range for K={instance.n_arms}")
    risks = instance.entropic_risks
    return risks[arm_index] - min(risks)


def kl_gaussian(a: "ArmSpec", b: "ArmSpec") -> float:
    """
    KL divergence KL(a || b) between two Gaussian arms.

    log(sigma_b / sigma_a) + (sigma_a^2 + (mu_a - mu_b)^2) / (2 sigma_b^2) - 1/2

    Args:
        a: Reference arm
        b: Alternative arm

    Returns:
        The divergence, >= 0, zero iff the arms are equal
    """
    _require_positive("variance", a.variance)
    _require_positive("variance", b.variance)
    diff = a.mean - b.mean
    return (
        0.5 * math.log(b.variance / a.variance)
        + (a.variance + diff * diff) / (2.0 * b.variance)
        - 0.5
    )

# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Policy interface and the registry of decision rules by name."""

# Standard library imports
from abc import ABC, abstractmethod
from typing import Any, Callable, ClassVar, Dict, List, Sequence, Type

# Third-party imports
import numpy as np

# Local/package imports
from entropic_bandits.exceptions import DomainError
from entropic_bandits.models.posterior import PosteriorState
from entropic_bandits.models.results import PolicyDecision

# Registry: policy name -> policy class
_policies: Dict[str, Type["Policy"]] = {}


class Policy(ABC):
    """
    Abstract base class for bandit decision rules.

    A policy sees the posterior state of every arm and the episode's random
    stream, and returns the arm to play together with the per-arm scores it
    minimized. Instances hold only their parameters, so they can be shipped
    to worker processes.
    """

    name: ClassVar[str] = ""

    def __init__(self, gamma: float):
        """
        Initialize the policy.

        Args:
            gamma: Risk-aversion parameter of the instance, > 0
        """
        if not gamma > 0.0:
            raise DomainError(f"gamma must be > 0, got {gamma!r}")
        self.gamma = gamma

    @abstractmethod
    def choose(
        self, states: Sequence[PosteriorState], rng: np.random.Generator
    ) -> PolicyDecision:
        """
        Pick the arm to play this round.

        Args:
            states: Posterior state of every arm, in arm order
            rng: Random stream owned by the calling episode

        Returns:
            The decision and its per-arm diagnostic
        """

    @property
    def params(self) -> Dict[str, Any]:
        """Constructor parameters beyond gamma, for reporting."""
        return {}

    def __repr__(self) -> str:
        return f"{type(self).__name__}(gamma={self.gamma!r}, params={self.params!r})"


def register_policy(name: str) -> Callable[[Type[Policy]], Type[Policy]]:
    """
    Decorator to register a policy class under a name.

    Args:
        name: Name used in configurations and result files

    Returns:
        Decorator that registers the policy class.
    """

    def decorator(policy_cls: Type[Policy]) -> Type[Policy]:
        if name in _policies and _policies[name] is not policy_cls:
            raise ValueError(f"policy {name!r} is already registered")
        policy_cls.name = name
        _policies[name] = policy_cls
        return policy_cls

    return decorator


def get_policy_names() -> List[str]:
    """Names of all registered policies, sorted."""
    return sorted(_policies)


def build_policy(name: str, gamma: float, **params: Any) -> Policy:
    """
    Construct a registered policy by name.

    Args:
        name: Registered policy name
        gamma: Risk-aversion parameter
        **params: Policy-specific parameters

    Returns:
        The policy instance

    Raises:
        DomainError: If the name is unknown or the parameters are rejected
    """
    try:
        policy_cls = _policies[name]
    except KeyError:
        raise DomainError(
            f"unknown policy {name!r}, expected one of {get_policy_names()}"
        ) from None
    try:
        return policy_cls(gamma, **params)
    except TypeError as exc:
        raise DomainError(f"invalid parameters for policy {name!r}: {exc}") from exc


def one_hot_decision(arm_index: int, n_arms: int) -> PolicyDecision:
    """Decision for a randomly chosen arm: 0.0 at the arm, 1.0 elsewhere."""
    diagnostic = [1.0] * n_arms
    diagnostic[arm_index] = 0.0
    return PolicyDecision.model_construct(
        arm_index=arm_index, diagnostic=tuple(diagnostic)
    )


def argmin_decision(scores: Sequence[float]) -> PolicyDecision:
    """Decision for the lowest score, lowest index on ties."""
    # np.argmin returns the first minimum, which is the tie rule
    return PolicyDecision.model_construct(
        arm_index=int(np.argmin(scores)), diagnostic=tuple(scores)
    )

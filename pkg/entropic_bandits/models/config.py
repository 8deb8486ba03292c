# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Experiment configuration.

A configuration is validated in full before any run starts: instance
invariants, policy names and parameters, the horizon against the number of
arms, and every checkpoint against the horizon.
"""

# Standard library imports
from typing import Any, Dict, Literal, Optional, Tuple

# Third-party imports
from pydantic import Field, field_validator, model_validator

# Local/package imports
from entropic_bandits.exceptions import ConfigError, DomainError
from entropic_bandits.models.base import BanditBaseModel
from entropic_bandits.models.instance import BanditInstance
from entropic_bandits.models.theory import XiPolicy


class PolicyConfig(BanditBaseModel):
    """A registered policy name and its parameters."""

    name: str
    params: Dict[str, float] = {}


class OutputConfig(BanditBaseModel):
    """Where result files are written."""

    directory: str = "results"


def _default_policies() -> Tuple[PolicyConfig, ...]:
    return (PolicyConfig(name="erts"), PolicyConfig(name="uniform"))


class ExperimentConfig(BanditBaseModel):
    """
    Everything a simulate, theory or validate run needs.

    Attributes:
        instance: Arms, gamma and the variance cap
        policies: Policies to simulate, in output order
        horizon: Rounds per episode
        n_runs: Episodes per policy
        root_seed: Unsigned 64-bit seed every run stream is split from
        checkpoints: Rounds reported in the regret table; None selects the
            default geometric grid clipped to the horizon
        xi: Fixed weight, also the fallback when xi_gamma is out of range
        xi_policy: ``xi_gamma`` (per-arm closed form) or ``fixed``
        witness_epsilon: Offset of the lower-bound witness arms
        workers: Worker processes for the simulator
        output: Output location
    """

    instance: BanditInstance
    policies: Tuple[PolicyConfig, ...] = Field(
        default_factory=_default_policies, min_length=1
    )
    horizon: int = Field(default=10_000, ge=1)
    n_runs: int = Field(default=100, ge=1)
    root_seed: int = Field(default=0, ge=0, lt=2**64)
    checkpoints: Optional[Tuple[int, ...]] = None
    xi: float = Field(default=0.9, gt=0.0, lt=1.0)
    xi_policy: Literal["xi_gamma", "fixed"] = "xi_gamma"
    witness_epsilon: float = Field(default=0.01, gt=0.0)
    workers: int = Field(default=1, ge=1)
    output: OutputConfig = Field(default_factory=OutputConfig)

    @field_validator("policies")
    @classmethod
    def _unique_policies(
        cls, value: Tuple[PolicyConfig, ...]
    ) -> Tuple[PolicyConfig, ...]:
        names = [policy.name for policy in value]
        if len(set(names)) != len(names):
            raise ValueError("policy names must be unique")
        return value

    @model_validator(mode="after")
    def _check_run_parameters(self) -> "ExperimentConfig":
        # Local/package imports
        from entropic_bandits.policies import build_policy
        from entropic_bandits.simulator import check_checkpoints

        n_arms = self.instance.n_arms
        if self.horizon < n_arms:
            raise ConfigError(
                f"must be at least the number of arms ({n_arms})", field="horizon"
            )
        if self.checkpoints is not None:
            try:
                check_checkpoints(self.checkpoints, n_arms, self.horizon)
            except DomainError as exc:
                raise ConfigError(str(exc), field="checkpoints") from exc
        for index, policy in enumerate(self.policies):
            try:
                build_policy(policy.name, self.instance.gamma, **policy.params)
            except DomainError as exc:
                raise ConfigError(str(exc), field=f"policies.{index}") from exc
        return self

    @property
    def resolved_checkpoints(self) -> Tuple[int, ...]:
        """Checkpoints to report, sorted and within [K, horizon]."""
        # Local/package imports
        from entropic_bandits.simulator import check_checkpoints, default_checkpoints

        n_arms = self.instance.n_arms
        if self.checkpoints is None:
            return default_checkpoints(n_arms, self.horizon)
        return check_checkpoints(self.checkpoints, n_arms, self.horizon)

    @property
    def xi_selection(self) -> XiPolicy:
        """The xi selection passed to the theory engine."""
        return XiPolicy(mode=self.xi_policy, xi=self.xi)

    def with_overrides(self, **overrides: Any) -> "ExperimentConfig":
        """
        Copy with top-level fields replaced and the result re-validated.

        ``None`` values are ignored, so unset CLI flags can be passed through.
        """
        data = self.model_dump()
        data.update({key: value for key, value in overrides.items() if value is not None})
        return ExperimentConfig.model_validate(data)

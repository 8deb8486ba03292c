# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Models carrying the regret-bound constants of an instance."""

# Standard library imports
from typing import Literal, Optional, Tuple

# Third-party imports
from pydantic import Field

# Local/package imports
from entropic_bandits.models.base import BanditBaseModel
from entropic_bandits.models.instance import ArmSpec

# Bumped whenever a field of an emitted JSON artifact changes meaning
SCHEMA_VERSION = "1.0"


class XiPolicy(BanditBaseModel):
    """How the free weight xi is chosen per arm.

    ``mode="fixed"`` uses ``xi`` for every arm. ``mode="xi_gamma"`` uses each
    arm's own xi_gamma and falls back to ``xi`` when xi_gamma is outside
    (0, 1).
    """

    mode: Literal["fixed", "xi_gamma"] = "xi_gamma"
    xi: float = Field(default=0.9, gt=0.0, lt=1.0)


class RConstant(BanditBaseModel):
    """The constant R_i for one arm and one xi, or an infeasibility flag.

    Attributes:
        xi: Weight used
        mean_term: 2 / (xi^2 gap^2)
        h_argument: gamma sigma^2 / (gamma sigma^2 - 2 (1 - xi) gap), None when
            the denominator is not positive
        precision_term: 1 / h(h_argument), None when infeasible
        value: max of the two terms, None when infeasible
        feasible: Whether the h-argument is inside the domain of h
    """

    xi: float
    mean_term: float
    h_argument: Optional[float] = None
    precision_term: Optional[float] = None
    value: Optional[float] = None
    feasible: bool


class XiGammaResult(BanditBaseModel):
    """The closed-form xi_gamma of an arm and the inequality it should satisfy."""

    value: float
    in_range: bool
    h_plus_root: float
    h_argument: Optional[float] = None
    inequality_holds: Optional[bool] = None


class WitnessResult(BanditBaseModel):
    """Alternative arm certifying the KL lower bound for one suboptimal arm.

    Attributes:
        arm: The witness N(mu_i + sigma_i sqrt(2/R_i) + epsilon, sigma_i^2)
        epsilon: Offset used
        r_constant: R_i the witness was built from
        kl: KL(arm_i || witness) from the Gaussian closed form
        kl_identity: 1/R_i + (2 sigma_i sqrt(2/R_i) + epsilon) epsilon / (2 sigma_i^2)
        er_shift: ER(witness) - ER(arm_i), equals -(sigma_i sqrt(2/R_i) + epsilon)
        er_margin: ER(witness) - ER(optimal arm)
        in_alternative_set: Whether the witness is strictly less risky than
            the optimal arm
    """

    arm: ArmSpec
    epsilon: float
    r_constant: float
    kl: float
    kl_identity: float
    er_shift: float
    er_margin: float
    in_alternative_set: bool


class ArmTheory(BanditBaseModel):
    """Per-arm entries of a theory report."""

    arm_index: int
    mean: float
    variance: float
    entropic_risk: float
    gap: float
    optimal: bool
    xi_gamma: Optional[XiGammaResult] = None
    xi_used: Optional[float] = None
    xi_fallback: bool = False
    r_constant: Optional[RConstant] = None
    feasible: bool = True
    witness: Optional[WitnessResult] = None

    @property
    def bound_term(self) -> Optional[float]:
        """R_i * gap for feasible suboptimal arms."""
        if self.optimal or self.r_constant is None or self.r_constant.value is None:
            return None
        return self.r_constant.value * self.gap


class TheoryReport(BanditBaseModel):
    """Regret-bound constants of an instance.

    ``asymptotic_bound`` sums R_i * gap over the feasible suboptimal arms;
    ``complete`` is False when some suboptimal arm was infeasible and left
    out of the sum. ``lower_bound`` is only reported for complete reports.
    """

    schema_version: str = SCHEMA_VERSION
    gamma: float
    optimal_arm: int
    xi_policy: XiPolicy
    arms: Tuple[ArmTheory, ...]
    asymptotic_bound: float = Field(ge=0.0)
    complete: bool
    lower_bound: Optional[float] = None
    risk_neutral_limit: Optional[float] = None

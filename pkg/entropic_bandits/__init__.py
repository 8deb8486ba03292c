# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Entropic-risk Gaussian bandits: ERTS, baselines, simulation and regret theory."""

__version__ = "0.1.0"

# Local/package imports
from entropic_bandits.exceptions import (
    BanditError,
    ConfigError,
    DomainError,
    InfeasibleConstantError,
    PreconditionError,
    SimulationError,
)
from entropic_bandits.models import (
    AggregateResult,
    ArmSpec,
    BanditInstance,
    ExperimentConfig,
    PolicyDecision,
    PosteriorSample,
    PosteriorState,
    RunResult,
    TheoryReport,
    XiPolicy,
)
from entropic_bandits.policies import (
    Policy,
    baseline_choose,
    build_policy,
    erts_choose,
    erts_episode,
    register_policy,
    run_episode,
)
from entropic_bandits.posterior import batch_posterior, sample_posterior, update
from entropic_bandits.risk import er_empirical, er_gap, er_gaussian, kl_gaussian
from entropic_bandits.simulator import pseudo_regret, regret_vs_theory, run_many
from entropic_bandits.theory import (
    asymptotic_upper_bound,
    build_theory_report,
    gamma_tail_bound,
    h,
    h_inv_minus,
    h_inv_plus,
    lower_bound,
    lower_bound_witness,
    r_constant,
    xi_gamma,
)

__all__ = [
    "__version__",
    "BanditError",
    "DomainError",
    "PreconditionError",
    "InfeasibleConstantError",
    "SimulationError",
    "ConfigError",
    "ArmSpec",
    "BanditInstance",
    "PosteriorState",
    "PosteriorSample",
    "PolicyDecision",
    "RunResult",
    "AggregateResult",
    "TheoryReport",
    "XiPolicy",
    "ExperimentConfig",
    "er_gaussian",
    "er_empirical",
    "er_gap",
    "kl_gaussian",
    "update",
    "sample_posterior",
    "batch_posterior",
    "Policy",
    "register_policy",
    "build_policy",
    "erts_choose",
    "erts_episode",
    "baseline_choose",
    "run_episode",
    "pseudo_regret",
    "run_many",
    "regret_vs_theory",
    "h",
    "h_inv_plus",
    "h_inv_minus",
    "r_constant",
    "xi_gamma",
    "asymptotic_upper_bound",
    "gamma_tail_bound",
    "lower_bound_witness",
    "lower_bound",
    "build_theory_report",
]

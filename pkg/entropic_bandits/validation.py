# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""
Fast invariant suite behind ``entropic-bandits validate``.

Every check returns a CheckResult instead of raising, so one failing check
does not hide the others. The posterior update is injectable: passing a
deliberately broken update must make ``posterior_equivalence`` fail.
"""

# Standard library imports
import logging
import math

from typing import Callable, List

# Third-party imports
import numpy as np

from opentelemetry import trace
from opentelemetry.trace import Status, StatusCode

# Local/package imports
from entropic_bandits.exceptions import InfeasibleConstantError
from entropic_bandits.models.base import BanditBaseModel
from entropic_bandits.models.instance import BanditInstance
from entropic_bandits.models.posterior import PosteriorState
from entropic_bandits.posterior import batch_posterior, update
from entropic_bandits.theory import (
    gamma_survival,
    gamma_tail_bound,
    h,
    h_inv_minus,
    h_inv_plus,
    lower_bound_witness,
    r_constant,
    xi_gamma,
)

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)

UpdateFn = Callable[[PosteriorState, float], PosteriorState]

POSTERIOR_SEQUENCES = 1000
POSTERIOR_MAX_LENGTH = 1000
POSTERIOR_VALUE_RANGE = 100.0
POSTERIOR_RTOL = 1e-10
ROUND_TRIP_ATOL = 1e-12
KL_ATOL = 1e-12

GRID_GAMMAS = (0.1, 0.5, 1.0, 2.0)
GRID_GAPS = (0.25, 0.5, 1.0)
GRID_VARIANCES = (0.5, 1.0, 2.0)
GRID_EPSILONS = (1.0, 0.1, 0.01)
TAIL_SHAPES = (2.0, 3.0, 5.0)
TAIL_RATES = (0.5, 1.0, 2.0)
TAIL_MULTIPLES = (1.5, 2.0, 4.0)


class CheckResult(BanditBaseModel):
    """Outcome of one invariant check."""

    name: str
    passed: bool
    detail: str = ""


def grid_instance(gamma: float, gap: float, variance: float) -> BanditInstance:
    """Two arms with equal variance whose entropic-risk gap is ``gap``."""
    return BanditInstance.gaussian(
        means=(gap, 0.0),
        variances=(variance, variance),
        gamma=gamma,
        sigma_max_sq=max(2.0, variance),
    )


def _close(a: float, b: float, rtol: float, atol: float) -> bool:
    return math.isclose(a, b, rel_tol=rtol, abs_tol=atol)


def check_posterior_equivalence(update_fn: UpdateFn = update, seed: int = 0) -> CheckResult:
    """Folded updates against the batch oracle on random sequences."""
    rng = np.random.default_rng(seed)
    for case in range(POSTERIOR_SEQUENCES):
        length = int(rng.integers(1, POSTERIOR_MAX_LENGTH + 1))
        samples = rng.uniform(-POSTERIOR_VALUE_RANGE, POSTERIOR_VALUE_RANGE, length)
        state = PosteriorState.prior()
        for x in samples.tolist():
            state = update_fn(state, x)
        oracle = batch_posterior(samples)
        # mu_hat can sit near 0, so its tolerance is scaled by the sample range
        atol = POSTERIOR_RTOL * POSTERIOR_VALUE_RANGE
        ok = (
            state.t_count == oracle.t_count
            and _close(state.mu_hat, oracle.mu_hat, POSTERIOR_RTOL, atol)
            and _close(state.alpha, oracle.alpha, POSTERIOR_RTOL, 0.0)
            and _close(state.beta, oracle.beta, POSTERIOR_RTOL, 0.0)
        )
        if not ok:
            return CheckResult(
                name="posterior_equivalence",
                passed=False,
                detail=(
                    f"sequence {case} (length {length}): sequential "
                    f"({state.mu_hat!r}, {state.t_count}, {state.alpha!r}, {state.beta!r}) "
                    f"!= batch ({oracle.mu_hat!r}, {oracle.t_count}, "
                    f"{oracle.alpha!r}, {oracle.beta!r})"
                ),
            )
    return CheckResult(
        name="posterior_equivalence",
        passed=True,
        detail=f"{POSTERIOR_SEQUENCES} sequences",
    )


def check_h_round_trip() -> CheckResult:
    """Both inverse branches of h on a log grid of levels."""
    levels = np.logspace(-6, 2, 81).tolist()
    for y in levels:
        upper = h_inv_plus(y)
        lower = h_inv_minus(y)
        if not lower <= 1.0 <= upper:
            return CheckResult(
                name="h_round_trip",
                passed=False,
                detail=f"y={y!r}: branches out of order ({lower!r}, {upper!r})",
            )
        for branch, x in (("plus", upper), ("minus", lower)):
            error = abs(h(x) - y)
            if error > ROUND_TRIP_ATOL:
                return CheckResult(
                    name="h_round_trip",
                    passed=False,
                    detail=f"y={y!r}: h(h_inv_{branch}(y)) off by {error!r}",
                )
    return CheckResult(name="h_round_trip", passed=True, detail=f"{len(levels)} levels")


def check_kl_identity() -> CheckResult:
    """Witness KL against its closed form, and the witness ER shift."""
    checked = 0
    for gamma in GRID_GAMMAS:
        for gap in GRID_GAPS:
            for variance in GRID_VARIANCES:
                instance = grid_instance(gamma, gap, variance)
                for epsilon in GRID_EPSILONS:
                    try:
                        witness = lower_bound_witness(instance, 1, epsilon)
                    except InfeasibleConstantError:
                        # infeasible R_1 has no witness
                        continue
                    checked += 1
                    expected_shift = -(
                        math.sqrt(variance) * math.sqrt(2.0 / witness.r_constant) + epsilon
                    )
                    if abs(witness.kl - witness.kl_identity) > KL_ATOL or abs(
                        witness.er_shift - expected_shift
                    ) > KL_ATOL:
                        return CheckResult(
                            name="kl_identity",
                            passed=False,
                            detail=(
                                f"gamma={gamma}, gap={gap}, variance={variance}, "
                                f"epsilon={epsilon}: kl={witness.kl!r} "
                                f"identity={witness.kl_identity!r} "
                                f"shift={witness.er_shift!r} expected={expected_shift!r}"
                            ),
                        )
    return CheckResult(name="kl_identity", passed=True, detail=f"{checked} witnesses")


def check_tail_bound_grid() -> CheckResult:
    """The Gamma tail bound dominates the exact survival function."""
    for alpha in TAIL_SHAPES:
        for beta in TAIL_RATES:
            for multiple in TAIL_MULTIPLES:
                x = multiple * alpha / beta
                exact = gamma_survival(alpha, beta, x)
                bound = gamma_tail_bound(alpha, beta, x)
                if exact > bound:
                    return CheckResult(
                        name="tail_bound_grid",
                        passed=False,
                        detail=(
                            f"alpha={alpha}, beta={beta}, x={x}: "
                            f"survival {exact!r} > bound {bound!r}"
                        ),
                    )
    count = len(TAIL_SHAPES) * len(TAIL_RATES) * len(TAIL_MULTIPLES)
    return CheckResult(name="tail_bound_grid", passed=True, detail=f"{count} points")


def check_xi_gamma_inequality() -> CheckResult:
    """1/h(argument) <= 2/(xi_gamma^2 gap^2) wherever xi_gamma is in (0, 1)."""
    in_range = 0
    out_of_range = []
    for gamma in GRID_GAMMAS:
        for gap in GRID_GAPS:
            for variance in GRID_VARIANCES:
                instance = grid_instance(gamma, gap, variance)
                result = xi_gamma(instance, 1)
                if not result.in_range:
                    out_of_range.append(f"({gamma}, {gap}, {variance})")
                    continue
                in_range += 1
                constant = r_constant(instance, 1, result.value)
                if not result.inequality_holds or not constant.feasible:
                    return CheckResult(
                        name="xi_gamma_inequality",
                        passed=False,
                        detail=(
                            f"gamma={gamma}, gap={gap}, variance={variance}: "
                            f"xi_gamma={result.value!r}"
                        ),
                    )
    detail = f"{in_range} in range"
    if out_of_range:
        detail += f"; xi_gamma outside (0, 1) at {', '.join(out_of_range)}"
    return CheckResult(name="xi_gamma_inequality", passed=True, detail=detail)


@tracer.start_as_current_span("Validation.run_invariant_suite")
def run_invariant_suite(update_fn: UpdateFn = update, seed: int = 0) -> List[CheckResult]:
    """
    Run every invariant check.

    Args:
        update_fn: Posterior update under test
        seed: Seed of the random posterior sequences

    Returns:
        One result per check, in a fixed order
    """
    results = [
        check_posterior_equivalence(update_fn, seed),
        check_h_round_trip(),
        check_kl_identity(),
        check_tail_bound_grid(),
        check_xi_gamma_inequality(),
    ]
    span = trace.get_current_span()
    failed = [result.name for result in results if not result.passed]
    span.set_attribute("validation.failed", len(failed))
    if failed:
        span.set_status(Status(StatusCode.ERROR, ", ".join(failed)))
    for result in results:
        logger.info(
            "Invariant check finished",
            extra={"check": result.name, "passed": result.passed, "detail": result.detail},
        )
    return results

# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""
Numerical evaluation of the ERTS regret-bound constants.

For a suboptimal arm i with gap D = ER(i) - ER(optimal) and a weight
xi in (0, 1)::

    R_i = max{ 2 / (xi^2 D^2),  1 / h(g s2 / (g s2 - 2 (1 - xi) D)) }

with h(x) = (x - 1 - log x) / 2, g the risk parameter and s2 the arm
variance. ERTS satisfies limsup R_n / log n <= sum_i R_i D_i, and every
consistent policy satisfies the matching liminf, so the same sum is both
the upper and the lower asymptotic constant.

The h-argument is only meaningful when its denominator is positive; arms
for which it is not are flagged infeasible, never clamped.
"""

# Standard library imports
import logging
import math

from typing import Any, Dict, List, Optional, Tuple

# Third-party imports
from opentelemetry import trace
from opentelemetry.trace import Status, StatusCode
from scipy.special import gammaincc

# Local/package imports
from entropic_bandits.exceptions import DomainError, InfeasibleConstantError
from entropic_bandits.models.instance import ArmSpec, BanditInstance
from entropic_bandits.models.theory import (
    ArmTheory,
    RConstant,
    TheoryReport,
    WitnessResult,
    XiGammaResult,
    XiPolicy,
)
from entropic_bandits.risk import er_gap, kl_gaussian
from entropic_bandits.utils.roots import bisect_root, expand_bracket

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)

# Absolute tolerance of the inverse-h bisections (on x, or on log x)
H_INVERSE_XTOL = 1e-13
# Relative slack allowed when checking the xi_gamma inequality
INEQUALITY_SLACK = 1e-12
# Minimum shape for which the Gamma tail bound is stated
TAIL_BOUND_MIN_SHAPE = 2.0


def h(x: float) -> float:
    """
    h(x) = (x - 1 - log x) / 2, convex with minimum 0 at x = 1.

    Args:
        x: Positive argument

    Returns:
        h(x) >= 0

    Raises:
        DomainError: If x <= 0 or x is not finite
    """
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"h is defined for x > 0, got {x!r}")
    d = x - 1.0
    if abs(d) < 0.5:
        # log1p keeps precision near the minimum
        return max(0.0, 0.5 * (d - math.log1p(d)))
    return 0.5 * (d - math.log(x))


def _h_of_log(u: float) -> float:
    # h(exp(u)), accurate for very negative u where exp(u) - 1 rounds to -1
    return 0.5 * (math.expm1(u) - u)


def _check_level(y: float) -> None:
    if not math.isfinite(y) or y < 0.0:
        raise DomainError(f"inverse of h is defined for y >= 0, got {y!r}")


def h_inv_plus(y: float) -> float:
    """
    The root of h(x) = y on [1, inf).

    Args:
        y: Level, >= 0

    Returns:
        max{x : h(x) = y}; 1 for y = 0
    """
    _check_level(y)
    if y == 0.0:
        return 1.0
    upper = expand_bracket(h, 2.0, lambda x: 2.0 * x, y)
    return bisect_root(lambda x: h(x) - y, 1.0, upper, H_INVERSE_XTOL)


def h_inv_minus(y: float) -> float:
    """
    The root of h(x) = y on (0, 1].

    The search runs over u = log x so that roots far below 1 keep their
    relative precision.

    Args:
        y: Level, >= 0

    Returns:
        min{x : h(x) = y}; 1 for y = 0

    Raises:
        DomainError: If the root underflows double precision
    """
    _check_level(y)
    if y == 0.0:
        return 1.0
    log_half = math.log(0.5)
    lower = expand_bracket(_h_of_log, log_half, lambda u: u + log_half, y)
    u = bisect_root(lambda v: _h_of_log(v) - y, lower, 0.0, H_INVERSE_XTOL)
    root = math.exp(u)
    if root == 0.0:
        raise DomainError(f"h_inv_minus({y!r}) underflows double precision")
    return root


def _suboptimal_gap(instance: BanditInstance, arm_index: int) -> float:
    gap = er_gap(instance, arm_index)
    if arm_index == instance.optimal_arm:
        raise DomainError(f"arm {arm_index} is the optimal arm")
    return gap


def _check_xi(xi: float) -> None:
    if not math.isfinite(xi) or not 0.0 < xi < 1.0:
        raise DomainError(f"xi must lie in (0, 1), got {xi!r}")


def _h_argument(
    gamma: float, variance: float, gap: float, xi: float
) -> Optional[float]:
    denominator = gamma * variance - 2.0 * (1.0 - xi) * gap
    if denominator <= 0.0:
        return None
    return gamma * variance / denominator


def r_constant(instance: BanditInstance, arm_index: int, xi: float) -> RConstant:
    """
    R_i for a suboptimal arm at a fixed xi.

    Args:
        instance: The bandit instance
        arm_index: A suboptimal arm
        xi: Weight in (0, 1)

    Returns:
        The constant with both terms, or an infeasible result when the
        h-argument leaves the domain of h

    Raises:
        DomainError: If xi is outside (0, 1) or the arm is optimal
    """
    _check_xi(xi)
    gap = _suboptimal_gap(instance, arm_index)
    arm = instance.arms[arm_index]
    mean_term = 2.0 / (xi * xi * gap * gap)
    argument = _h_argument(instance.gamma, arm.variance, gap, xi)
    if argument is None:
        return RConstant(xi=xi, mean_term=mean_term, feasible=False)
    h_value = h(argument)
    if h_value <= 0.0:
        # argument rounded onto 1: the second term is unbounded
        return RConstant(
            xi=xi, mean_term=mean_term, h_argument=argument, feasible=False
        )
    precision_term = 1.0 / h_value
    return RConstant(
        xi=xi,
        mean_term=mean_term,
        h_argument=argument,
        precision_term=precision_term,
        value=max(mean_term, precision_term),
        feasible=True,
    )


def xi_gamma(instance: BanditInstance, arm_index: int) -> XiGammaResult:
    """
    The closed-form weight xi_gamma of a suboptimal arm.

    xi_gamma = 1 - (g s2 / (2 D)) (1 - 1 / h_inv_plus(D^2 / 2)). When it lies
    in (0, 1) the precision term of R_i collapses to 2 / D^2, and the result
    records whether 1/h(argument) <= 2 / (xi_gamma^2 D^2) holds numerically.

    Args:
        instance: The bandit instance
        arm_index: A suboptimal arm

    Returns:
        The raw value with its range flag and the inequality check
    """
    gap = _suboptimal_gap(instance, arm_index)
    variance = instance.arms[arm_index].variance
    scaled = instance.gamma * variance
    root = h_inv_plus(gap * gap / 2.0)
    value = 1.0 - scaled / (2.0 * gap) * (1.0 - 1.0 / root)
    if not 0.0 < value < 1.0:
        logger.debug(
            "xi_gamma outside (0, 1)",
            extra={"arm_index": arm_index, "xi_gamma": value},
        )
        return XiGammaResult(value=value, in_range=False, h_plus_root=root)
    argument = _h_argument(instance.gamma, variance, gap, value)
    holds = False
    if argument is not None and h(argument) > 0.0:
        lhs = 1.0 / h(argument)
        rhs = 2.0 / (value * value * gap * gap)
        holds = lhs <= rhs * (1.0 + INEQUALITY_SLACK)
    return XiGammaResult(
        value=value,
        in_range=True,
        h_plus_root=root,
        h_argument=argument,
        inequality_holds=holds,
    )


def _arm_theory(
    instance: BanditInstance, arm_index: int, xi_policy: XiPolicy
) -> ArmTheory:
    arm = instance.arms[arm_index]
    gap = er_gap(instance, arm_index)
    common: Dict[str, Any] = dict(
        arm_index=arm_index,
        mean=arm.mean,
        variance=arm.variance,
        entropic_risk=arm.entropic_risk(instance.gamma),
        gap=gap,
    )
    if arm_index == instance.optimal_arm:
        return ArmTheory(optimal=True, **common)

    xg = xi_gamma(instance, arm_index)
    fallback = False
    if xi_policy.mode == "xi_gamma" and xg.in_range:
        xi_used = xg.value
    else:
        xi_used = xi_policy.xi
        fallback = xi_policy.mode == "xi_gamma"
    if fallback:
        span = trace.get_current_span()
        span.add_event("xi_gamma_fallback", {"arm_index": arm_index})
        logger.warning(
            "xi_gamma out of range, using fixed xi",
            extra={"arm_index": arm_index, "xi_gamma": xg.value, "xi": xi_used},
        )
    constant = r_constant(instance, arm_index, xi_used)
    if not constant.feasible:
        trace.get_current_span().add_event("arm_infeasible", {"arm_index": arm_index})
        logger.warning(
            "R_i infeasible: h-argument outside its domain",
            extra={"arm_index": arm_index, "xi": xi_used},
        )
    return ArmTheory(
        optimal=False,
        xi_gamma=xg,
        xi_used=xi_used,
        xi_fallback=fallback,
        r_constant=constant,
        feasible=constant.feasible,
        **common,
    )


def _arm_theories(instance: BanditInstance, xi_policy: XiPolicy) -> List[ArmTheory]:
    return [_arm_theory(instance, i, xi_policy) for i in range(instance.n_arms)]


def _bound_sum(arms: List[ArmTheory]) -> float:
    # Both bounds go through this sum so they agree bit for bit
    total = 0.0
    for entry in arms:
        term = entry.bound_term
        if term is not None:
            total += term
    return total


@tracer.start_as_current_span("theory.asymptotic_upper_bound")
def asymptotic_upper_bound(
    instance: BanditInstance, xi_policy: Optional[XiPolicy] = None
) -> TheoryReport:
    """
    Asymptotic regret constant sum_i R_i * gap_i of ERTS on an instance.

    Args:
        instance: The bandit instance
        xi_policy: Weight selection; defaults to per-arm xi_gamma with a
            fixed fallback of 0.9

    Returns:
        A report with per-arm constants and flags

    Raises:
        InfeasibleConstantError: If every suboptimal arm is infeasible
    """
    policy = xi_policy or XiPolicy()
    span = trace.get_current_span()
    span.set_attribute("bandit.arms", instance.n_arms)
    span.set_attribute("bandit.gamma", instance.gamma)
    arms = _arm_theories(instance, policy)
    suboptimal = [entry for entry in arms if not entry.optimal]
    if not any(entry.feasible for entry in suboptimal):
        span.set_status(Status(StatusCode.ERROR, "all arms infeasible"))
        raise InfeasibleConstantError("every suboptimal arm has an infeasible R_i")
    report = TheoryReport(
        gamma=instance.gamma,
        optimal_arm=instance.optimal_arm,
        xi_policy=policy,
        arms=tuple(arms),
        asymptotic_bound=_bound_sum(arms),
        complete=all(entry.feasible for entry in suboptimal),
    )
    logger.debug(
        "Computed asymptotic upper bound",
        extra={"bound": report.asymptotic_bound, "complete": report.complete},
    )
    return report


def lower_bound(instance: BanditInstance, xi_policy: Optional[XiPolicy] = None) -> float:
    """
    Asymptotic lower bound sum_i R_i * gap_i over consistent policies.

    Identical to the upper bound under the same xi selection.

    Raises:
        InfeasibleConstantError: If any suboptimal arm is infeasible
    """
    arms = _arm_theories(instance, xi_policy or XiPolicy())
    for entry in arms:
        if not entry.optimal and not entry.feasible:
            raise InfeasibleConstantError(
                f"R_{entry.arm_index} is infeasible", arm_index=entry.arm_index
            )
    return _bound_sum(arms)


def gamma_tail_bound(alpha: float, beta: float, x: float) -> float:
    """
    Upper bound exp(-2 alpha h(beta x / alpha)) on P(X >= x), X ~ Gamma(alpha, rate beta).

    Args:
        alpha: Shape, >= 2
        beta: Rate, > 0
        x: Threshold above the mean alpha / beta

    Returns:
        The bound, in (0, 1)

    Raises:
        DomainError: Outside the domain where the bound is stated
    """
    if not math.isfinite(alpha) or alpha < TAIL_BOUND_MIN_SHAPE:
        raise DomainError(f"tail bound requires alpha >= 2, got {alpha!r}")
    if not math.isfinite(beta) or beta <= 0.0:
        raise DomainError(f"tail bound requires beta > 0, got {beta!r}")
    if not math.isfinite(x) or x <= alpha / beta:
        raise DomainError(f"tail bound requires x > alpha/beta, got {x!r}")
    return math.exp(-2.0 * alpha * h(beta * x / alpha))


def gamma_survival(alpha: float, beta: float, x: float) -> float:
    """Exact P(X >= x) for X ~ Gamma(alpha, rate beta), via the regularized incomplete gamma."""
    return float(gammaincc(alpha, beta * x))


def _select_xi(instance: BanditInstance, arm_index: int, xi_policy: XiPolicy) -> float:
    if xi_policy.mode == "xi_gamma":
        xg = xi_gamma(instance, arm_index)
        if xg.in_range:
            return xg.value
    return xi_policy.xi


def lower_bound_witness(
    instance: BanditInstance,
    arm_index: int,
    epsilon: float,
    xi_policy: Optional[XiPolicy] = None,
) -> WitnessResult:
    """
    Alternative arm N(mu_i + sigma_i sqrt(2/R_i) + epsilon, sigma_i^2) for the lower bound.

    Its KL divergence from arm i tends to 1/R_i as epsilon -> 0, certifying
    1/eta(i) >= R_i. Membership in the alternative set (strictly less risky
    than the optimal arm) is reported, not assumed.

    Args:
        instance: The bandit instance
        arm_index: A suboptimal arm
        epsilon: Positive offset
        xi_policy: Weight selection used for R_i

    Returns:
        The witness with its KL, the closed-form identity and the ER shift

    Raises:
        DomainError: If epsilon is not positive
        InfeasibleConstantError: If R_i is infeasible
    """
    if not math.isfinite(epsilon) or epsilon <= 0.0:
        raise DomainError(f"epsilon must be > 0, got {epsilon!r}")
    policy = xi_policy or XiPolicy()
    constant = r_constant(instance, arm_index, _select_xi(instance, arm_index, policy))
    if constant.value is None:
        raise InfeasibleConstantError(
            f"R_{arm_index} is infeasible", arm_index=arm_index
        )
    arm = instance.arms[arm_index]
    r_value = constant.value
    shift = arm.std * math.sqrt(2.0 / r_value) + epsilon
    witness = ArmSpec(mean=arm.mean + shift, variance=arm.variance)
    identity = 1.0 / r_value + (
        2.0 * arm.std * math.sqrt(2.0 / r_value) + epsilon
    ) * epsilon / (2.0 * arm.variance)
    witness_risk = witness.entropic_risk(instance.gamma)
    optimal_risk = instance.arms[instance.optimal_arm].entropic_risk(instance.gamma)
    margin = witness_risk - optimal_risk
    result = WitnessResult(
        arm=witness,
        epsilon=epsilon,
        r_constant=r_value,
        kl=kl_gaussian(arm, witness),
        kl_identity=identity,
        er_shift=witness_risk - arm.entropic_risk(instance.gamma),
        er_margin=margin,
        in_alternative_set=margin < 0.0,
    )
    if not result.in_alternative_set:
        logger.warning(
            "Witness is not less risky than the optimal arm",
            extra={"arm_index": arm_index, "epsilon": epsilon, "er_margin": margin},
        )
    return result


def tail_upper_bound(
    instance: BanditInstance,
    arm_index: int,
    s: int,
    mu_hat: float,
    sigma_hat_sq: float,
    xi: float,
    epsilon: float,
) -> float:
    """
    Bound on the chance that a suboptimal arm's sampled ER undercuts ER(optimal) + epsilon.

    After s pulls with empirical mean mu_hat and variance sigma_hat_sq::

        exp(-(s/2)(mu_i - mu_hat + xi (D - eps))^2)
          + exp(-s h(g sigma_hat_sq / (g s2 - 2 (1 - xi)(D - eps))))

    Args:
        instance: The bandit instance
        arm_index: A suboptimal arm
        s: Number of pulls, >= 1
        mu_hat: Empirical mean of the arm
        sigma_hat_sq: Empirical variance of the arm, > 0
        xi: Weight in (0, 1)
        epsilon: Slack in [0, gap)

    Returns:
        The (unclipped) bound

    Raises:
        InfeasibleConstantError: If the h-argument denominator is not positive
    """
    _check_xi(xi)
    gap = _suboptimal_gap(instance, arm_index)
    if s < 1:
        raise DomainError("s must be at least 1")
    if not 0.0 <= epsilon < gap:
        raise DomainError(f"epsilon must lie in [0, gap), got {epsilon!r}")
    if not math.isfinite(sigma_hat_sq) or sigma_hat_sq <= 0.0:
        raise DomainError("sigma_hat_sq must be > 0")
    arm = instance.arms[arm_index]
    reduced = gap - epsilon
    denominator = instance.gamma * arm.variance - 2.0 * (1.0 - xi) * reduced
    if denominator <= 0.0:
        raise InfeasibleConstantError(
            "tail bound h-argument outside its domain", arm_index=arm_index
        )
    mean_part = math.exp(-0.5 * s * (arm.mean - mu_hat + xi * reduced) ** 2)
    precision_part = math.exp(
        -s * h(instance.gamma * sigma_hat_sq / denominator)
    )
    return mean_part + precision_part


def pull_count_leading_term(
    instance: BanditInstance, arm_index: int, n: int, xi: float, epsilon: float
) -> float:
    """
    Explicit part of the finite-horizon bound on E[T_{i,n}].

    1 + max{2 log(2n) / (xi^2 (D - eps)^2), log(2n) / h(g s2 / (g s2 - 2(1 - xi)(D - eps)))}.
    The unnamed epsilon-dependent constants of the full bound are excluded.

    Raises:
        InfeasibleConstantError: If the h-argument leaves its domain
    """
    _check_xi(xi)
    gap = _suboptimal_gap(instance, arm_index)
    if n < 1:
        raise DomainError("n must be at least 1")
    if not 0.0 <= epsilon < gap:
        raise DomainError(f"epsilon must lie in [0, gap), got {epsilon!r}")
    reduced = gap - epsilon
    variance = instance.arms[arm_index].variance
    argument = _h_argument(instance.gamma, variance, reduced, xi)
    if argument is None or h(argument) <= 0.0:
        raise InfeasibleConstantError(
            "pull-count h-argument outside its domain", arm_index=arm_index
        )
    log_term = math.log(2.0 * n)
    return 1.0 + max(
        2.0 * log_term / (xi * xi * reduced * reduced), log_term / h(argument)
    )


def risk_neutral_limit(instance: BanditInstance) -> float:
    """
    Value of the asymptotic constant as gamma -> 0+.

    Gaps become mean differences and R_i tends to 2 / (mu* - mu_i)^2, so the
    constant tends to sum_i 2 / (mu* - mu_i) over the non-best arms.

    Raises:
        DomainError: If two arms share the highest mean
    """
    means = sorted((arm.mean for arm in instance.arms), reverse=True)
    best = means[0]
    if best - means[1] <= 0.0:
        raise DomainError("risk-neutral limit needs a unique highest mean")
    return sum(2.0 / (best - m) for m in means[1:])


def _witness_or_none(
    instance: BanditInstance, entry: ArmTheory, epsilon: float, policy: XiPolicy
) -> Optional[WitnessResult]:
    if entry.optimal or not entry.feasible:
        return None
    return lower_bound_witness(instance, entry.arm_index, epsilon, policy)


@tracer.start_as_current_span("theory.build_theory_report")
def build_theory_report(
    instance: BanditInstance,
    xi_policy: Optional[XiPolicy] = None,
    witness_epsilon: float = 0.01,
) -> TheoryReport:
    """
    Full report: upper bound, lower bound, witnesses and the risk-neutral limit.

    Infeasibilities stay in-band: when every suboptimal arm is infeasible
    the bound is reported as 0 with ``complete`` False.

    Args:
        instance: The bandit instance
        xi_policy: Weight selection
        witness_epsilon: Offset of the lower-bound witnesses

    Returns:
        The report
    """
    policy = xi_policy or XiPolicy()
    try:
        report = asymptotic_upper_bound(instance, policy)
    except InfeasibleConstantError:
        arms = _arm_theories(instance, policy)
        report = TheoryReport(
            gamma=instance.gamma,
            optimal_arm=instance.optimal_arm,
            xi_policy=policy,
            arms=tuple(arms),
            asymptotic_bound=0.0,
            complete=False,
        )
    arms_with_witness: Tuple[ArmTheory, ...] = tuple(
        entry.model_copy(
            update={
                "witness": _witness_or_none(instance, entry, witness_epsilon, policy)
            }
        )
        for entry in report.arms
    )
    try:
        neutral: Optional[float] = risk_neutral_limit(instance)
    except DomainError:
        neutral = None
    return report.model_copy(
        update={
            "arms": arms_with_witness,
            "lower_bound": _bound_sum(list(report.arms)) if report.complete else None,
            "risk_neutral_limit": neutral,
        }
    )

# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""
Seeded Monte Carlo runs, their aggregation and the comparison with theory.

Runs are independent tasks; with ``workers > 1`` they execute in a process
pool. Aggregation always folds results in run-index order, so the aggregate
is bit-identical whatever the degree of parallelism.
"""

# Standard library imports
import logging
import math

from concurrent.futures import ProcessPoolExecutor
from concurrent.futures.process import BrokenProcessPool
from functools import partial
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

# Third-party imports
import numpy as np

from opentelemetry import trace
from opentelemetry.trace import Status, StatusCode

# Local/package imports
from entropic_bandits.exceptions import DomainError, SimulationError
from entropic_bandits.models.instance import BanditInstance
from entropic_bandits.models.results import (
    AggregateResult,
    ComparisonRow,
    PullRateRow,
    RunResult,
)
from entropic_bandits.models.theory import TheoryReport
from entropic_bandits.policies.base import Policy
from entropic_bandits.policies.episode import run_episode
from entropic_bandits.risk import er_gap
from entropic_bandits.utils.seeding import split_stream

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)

# Geometric grid exposing log-growth of the regret
DEFAULT_CHECKPOINTS: Tuple[int, ...] = (100, 1_000, 10_000, 50_000)


def pseudo_regret(instance: BanditInstance, pulls: Sequence[int]) -> float:
    """
    Pseudo-regret sum_i pulls_i * gap_i of a vector of pull counts.

    Raises:
        DomainError: If the counts are negative or do not match the arms
    """
    if len(pulls) != instance.n_arms:
        raise DomainError(
            f"expected {instance.n_arms} pull counts, got {len(pulls)}"
        )
    total = 0.0
    for index, count in enumerate(pulls):
        if count < 0:
            raise DomainError(f"pull count of arm {index} is negative")
        if index != instance.optimal_arm:
            total += int(count) * er_gap(instance, index)
    return total


def _run_one(
    instance: BanditInstance,
    policy: Policy,
    horizon: int,
    root_seed: int,
    run_index: int,
) -> RunResult:
    # Module level so the process pool can pickle it
    rng = split_stream(root_seed, run_index)
    return run_episode(instance, policy, horizon, rng, root_seed, run_index)


def _iter_runs(
    task: Callable[[int], RunResult], n_runs: int, workers: int
) -> Iterator[RunResult]:
    if workers == 1:
        yield from map(task, range(n_runs))
        return
    with ProcessPoolExecutor(max_workers=workers) as executor:
        # map yields in submission order, which is run-index order
        yield from executor.map(task, range(n_runs))


def check_checkpoints(checkpoints: Iterable[int], n_arms: int, horizon: int) -> Tuple[int, ...]:
    """
    Sorted, de-duplicated checkpoints, each in [n_arms, horizon].

    Raises:
        DomainError: If a checkpoint is out of range
    """
    resolved = tuple(sorted(set(int(c) for c in checkpoints)))
    for checkpoint in resolved:
        if not n_arms <= checkpoint <= horizon:
            raise DomainError(
                f"checkpoint {checkpoint} outside [{n_arms}, {horizon}]"
            )
    return resolved


def default_checkpoints(n_arms: int, horizon: int) -> Tuple[int, ...]:
    """The default grid clipped to [n_arms, horizon], or (horizon,) if nothing is left."""
    clipped = tuple(c for c in DEFAULT_CHECKPOINTS if n_arms <= c <= horizon)
    return clipped or (horizon,)


class _Accumulator:
    """Welford running mean and variance over per-round trajectories."""

    def __init__(self, horizon: int, n_arms: int, checkpoints: Tuple[int, ...]):
        self.count = 0
        self.mean = np.zeros(horizon, dtype=np.float64)
        self.m2 = np.zeros(horizon, dtype=np.float64)
        self.pull_fractions = np.zeros(n_arms, dtype=np.float64)
        self.checkpoints = checkpoints
        self.checkpoint_pulls = np.zeros((len(checkpoints), n_arms), dtype=np.float64)
        self.n_arms = n_arms

    def add(self, run: RunResult) -> None:
        self.count += 1
        delta = run.regret_trajectory - self.mean
        self.mean += delta / self.count
        self.m2 += delta * (run.regret_trajectory - self.mean)
        fractions = run.pulls / run.horizon
        self.pull_fractions += (fractions - self.pull_fractions) / self.count
        for row, checkpoint in enumerate(self.checkpoints):
            counts = np.bincount(run.choices[:checkpoint], minlength=self.n_arms)
            self.checkpoint_pulls[row] += (
                counts - self.checkpoint_pulls[row]
            ) / self.count

    def std(self) -> np.ndarray:
        # Population standard deviation; a single run has std 0
        return np.sqrt(np.maximum(self.m2 / self.count, 0.0))


@tracer.start_as_current_span("Simulator.run_many")
def run_many(
    instance: BanditInstance,
    policy: Policy,
    horizon: int,
    n_runs: int,
    root_seed: int,
    checkpoints: Optional[Sequence[int]] = None,
    workers: int = 1,
) -> AggregateResult:
    """
    Run ``n_runs`` independent episodes and aggregate them.

    Run k uses ``split_stream(root_seed, k)``, so doubling ``n_runs``
    replays the first runs exactly.

    Args:
        instance: The bandit instance
        policy: Decision rule
        horizon: Rounds per episode
        n_runs: Number of episodes, >= 1
        root_seed: Unsigned 64-bit root seed
        checkpoints: Rounds at which regret / log n and pull counts are
            recorded; defaults to the geometric grid clipped to the horizon
        workers: Number of worker processes; 1 runs inline

    Returns:
        Mean and standard deviation trajectories with checkpoint statistics

    Raises:
        DomainError: For invalid run parameters
        SimulationError: If a worker process dies
    """
    if n_runs < 1:
        raise DomainError("n_runs must be at least 1")
    if workers < 1:
        raise DomainError("workers must be at least 1")
    if horizon < instance.n_arms:
        raise DomainError(f"horizon {horizon} is smaller than the {instance.n_arms} arms")
    resolved = (
        default_checkpoints(instance.n_arms, horizon)
        if checkpoints is None
        else check_checkpoints(checkpoints, instance.n_arms, horizon)
    )
    span = trace.get_current_span()
    span.set_attribute("policy.name", policy.name)
    span.set_attribute("run.horizon", horizon)
    span.set_attribute("run.n_runs", n_runs)
    span.set_attribute("run.workers", workers)

    task = partial(_run_one, instance, policy, horizon, root_seed)
    accumulator = _Accumulator(horizon, instance.n_arms, resolved)
    try:
        for run in _iter_runs(task, n_runs, workers):
            accumulator.add(run)
    except BrokenProcessPool as exc:
        span.set_status(Status(StatusCode.ERROR, "worker pool broken"))
        logger.error(
            "Worker pool broke during simulation",
            extra={"policy": policy.name, "completed_runs": accumulator.count},
        )
        raise SimulationError(
            f"worker pool broke after {accumulator.count} of {n_runs} runs"
        ) from exc

    regret_over_log_n: Dict[int, float] = {
        c: float(accumulator.mean[c - 1] / math.log(c)) for c in resolved
    }
    pulls_at: Dict[int, Tuple[float, ...]] = {
        c: tuple(float(v) for v in accumulator.checkpoint_pulls[row])
        for row, c in enumerate(resolved)
    }
    logger.info(
        "Simulation finished",
        extra={
            "policy": policy.name,
            "n_runs": n_runs,
            "horizon": horizon,
            "final_mean_regret": float(accumulator.mean[-1]),
        },
    )
    return AggregateResult(
        policy=policy.name,
        mean_regret_trajectory=accumulator.mean,
        std_regret_trajectory=accumulator.std(),
        mean_pull_fractions=accumulator.pull_fractions,
        n_runs=n_runs,
        regret_over_log_n=regret_over_log_n,
        mean_pulls_at_checkpoint=pulls_at,
    )


def regret_vs_theory(
    aggregate: AggregateResult,
    theory_report: TheoryReport,
    checkpoints: Sequence[int],
) -> List[ComparisonRow]:
    """
    Empirical regret / log n at each checkpoint beside the theoretical constant.

    No pass or fail judgment is made here.

    Raises:
        DomainError: If a checkpoint is outside [K, horizon]
    """
    resolved = check_checkpoints(
        checkpoints, len(theory_report.arms), aggregate.horizon
    )
    upper = theory_report.asymptotic_bound if theory_report.complete else None
    rows = []
    for n in resolved:
        mean = float(aggregate.mean_regret_trajectory[n - 1])
        rows.append(
            ComparisonRow(
                policy=aggregate.policy,
                n=n,
                mean_regret=mean,
                std_regret=float(aggregate.std_regret_trajectory[n - 1]),
                regret_over_log_n=mean / math.log(n),
                theory_upper=upper,
                theory_lower=theory_report.lower_bound,
            )
        )
    return rows


def pull_rates(
    aggregate: AggregateResult, theory_report: TheoryReport
) -> List[PullRateRow]:
    """Mean pulls / log n of every suboptimal arm at each recorded checkpoint, beside R_i."""
    rows = []
    for n, pulls in sorted(aggregate.mean_pulls_at_checkpoint.items()):
        for entry in theory_report.arms:
            if entry.optimal:
                continue
            rows.append(
                PullRateRow(
                    policy=aggregate.policy,
                    arm_index=entry.arm_index,
                    n=n,
                    pulls_over_log_n=pulls[entry.arm_index] / math.log(n),
                    r_constant=(
                        entry.r_constant.value if entry.r_constant is not None else None
                    ),
                )
            )
    return rows

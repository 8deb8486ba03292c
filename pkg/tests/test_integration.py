# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""End-to-end acceptance checks of the theory engine and the simulator.

Desk-scale variants run with the default test selection; the full-scale
runs are marked ``slow``.
"""

# Standard library imports
import math

# Third-party imports
import numpy as np
import pytest

# Local/package imports
from entropic_bandits.cli import PLOT_DATA, REGRET_CSV, SUMMARY_JSON, cmd_simulate
from entropic_bandits.models.config import ExperimentConfig
from entropic_bandits.models.instance import BanditInstance
from entropic_bandits.policies import ErtsPolicy, UniformPolicy
from entropic_bandits.risk import er_empirical, er_gaussian
from entropic_bandits.simulator import run_many
from entropic_bandits.theory import (
    build_theory_report,
    gamma_survival,
    gamma_tail_bound,
    lower_bound_witness,
)
from entropic_bandits.validation import (
    GRID_EPSILONS,
    GRID_GAMMAS,
    GRID_GAPS,
    GRID_VARIANCES,
    TAIL_MULTIPLES,
    TAIL_RATES,
    TAIL_SHAPES,
    grid_instance,
)

ER_GRID = [
    (mean, variance, gamma)
    for mean in (-1.0, 0.0, 1.0)
    for variance in (0.25, 1.0, 2.0)
    for gamma in (0.1, 0.5, 1.0)
]


def _er_grid_hits(seed: int, draws: int) -> int:
    rng = np.random.default_rng(seed)
    hits = 0
    for mean, variance, gamma in ER_GRID:
        samples = rng.normal(mean, math.sqrt(variance), draws)
        if abs(er_empirical(samples, gamma) - er_gaussian(mean, variance, gamma)) <= 0.01:
            hits += 1
    return hits


@pytest.mark.acceptance
class TestEntropicRiskMonteCarlo:
    def test_single_seed(self):
        assert _er_grid_hits(0, 1_000_000) >= len(ER_GRID) - 1

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(10))
    def test_ten_seeds(self, seed):
        assert _er_grid_hits(seed, 1_000_000) >= len(ER_GRID) - 1


@pytest.mark.acceptance
class TestTheoryAcceptance:
    def test_risk_neutral_limit(self):
        instance = BanditInstance.gaussian(
            means=(1.0, 0.0), variances=(1.0, 1.0), gamma=1e-3, sigma_max_sq=2.0
        )
        report = build_theory_report(instance)
        assert report.asymptotic_bound == pytest.approx(2.0, rel=0.05)

    def test_witness_shift_is_exact(self):
        for gamma in GRID_GAMMAS:
            for gap in GRID_GAPS:
                for variance in GRID_VARIANCES:
                    instance = grid_instance(gamma, gap, variance)
                    report = build_theory_report(instance)
                    if not report.arms[1].feasible:
                        continue
                    for epsilon in GRID_EPSILONS:
                        witness = lower_bound_witness(instance, 1, epsilon)
                        expected = -(
                            math.sqrt(variance) * math.sqrt(2.0 / witness.r_constant)
                            + epsilon
                        )
                        shift = witness.arm.entropic_risk(gamma) - instance.arms[
                            1
                        ].entropic_risk(gamma)
                        assert shift == pytest.approx(expected, abs=1e-12)
                        assert witness.kl == pytest.approx(witness.kl_identity, abs=1e-12)

    def test_tail_bound_against_samples(self):
        rng = np.random.default_rng(2024)
        draws = 1_000_000
        for alpha in TAIL_SHAPES:
            for beta in TAIL_RATES:
                samples = rng.gamma(alpha, 1.0 / beta, draws)
                for multiple in TAIL_MULTIPLES:
                    x = multiple * alpha / beta
                    bound = gamma_tail_bound(alpha, beta, x)
                    assert gamma_survival(alpha, beta, x) <= bound
                    empirical = float(np.mean(samples >= x))
                    stderr = math.sqrt(max(empirical * (1 - empirical), 1e-12) / draws)
                    assert empirical <= bound + 3 * stderr


@pytest.mark.acceptance
class TestRegretBehavior:
    def test_desk_scale(self, reference_instance):
        report = build_theory_report(reference_instance)
        erts = run_many(reference_instance, ErtsPolicy(1.0), 2_000, 20, 11, [100, 2_000])
        uniform = run_many(reference_instance, UniformPolicy(1.0), 2_000, 20, 11, [100, 2_000])
        assert erts.mean_pull_fractions[0] >= 0.9
        assert erts.mean_regret_trajectory[-1] <= uniform.mean_regret_trajectory[-1] / 10
        assert erts.regret_over_log_n[2_000] <= 3 * report.asymptotic_bound

    @pytest.mark.slow
    def test_full_scale(self, reference_instance):
        report = build_theory_report(reference_instance)
        checkpoints = [1_000, 5_000, 50_000]
        erts = run_many(
            reference_instance, ErtsPolicy(1.0), 50_000, 200, 1, checkpoints, workers=4
        )
        uniform = run_many(
            reference_instance, UniformPolicy(1.0), 50_000, 200, 1, checkpoints, workers=4
        )
        # Regret over log n climbs toward its limit from below at these horizons
        for n in checkpoints:
            assert erts.regret_over_log_n[n] <= report.asymptotic_bound
        assert erts.regret_over_log_n[50_000] <= 1.25 * erts.regret_over_log_n[5_000]
        suboptimal = {n: erts.mean_pulls_at_checkpoint[n][1] / n for n in checkpoints}
        assert suboptimal[50_000] < suboptimal[5_000] < suboptimal[1_000]
        assert suboptimal[50_000] < 0.05
        assert erts.mean_pull_fractions[0] >= 0.95
        assert erts.mean_regret_trajectory[-1] <= uniform.mean_regret_trajectory[-1] / 10


@pytest.mark.acceptance
class TestDeterminism:
    def test_simulate_outputs_byte_identical(self, tmp_path, minimal_config_dict):
        config = ExperimentConfig.model_validate(minimal_config_dict)
        outputs = []
        for _ in range(2):
            paths = cmd_simulate(config)
            outputs.append({path.name: path.read_bytes() for path in paths})
        assert set(outputs[0]) == {REGRET_CSV, SUMMARY_JSON, PLOT_DATA}
        assert outputs[0] == outputs[1]

# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Tests for entropic risk, gaps and the Gaussian KL divergence."""

# Standard library imports
import math

# Third-party imports
import numpy as np
import pytest

# Local/package imports
from entropic_bandits.exceptions import DomainError
from entropic_bandits.models.instance import ArmSpec, BanditInstance
from entropic_bandits.risk import er_empirical, er_gap, er_gaussian, kl_gaussian


@pytest.mark.unit
class TestErGaussian:
    """Closed-form entropic risk."""

    @pytest.mark.parametrize(
        "mean, variance, gamma, expected",
        [(1.0, 2.0, 1.0, 0.0), (0.0, 1.0, 0.5, 0.25), (0.3, 0.09, 2.0, -0.21)],
    )
    def test_closed_form(self, mean, variance, gamma, expected):
        assert er_gaussian(mean, variance, gamma) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize(
        "variance, gamma",
        [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -0.5), (math.inf, 1.0), (1.0, math.nan)],
    )
    def test_invalid_inputs(self, variance, gamma):
        with pytest.raises(DomainError):
            er_gaussian(0.0, variance, gamma)

    def test_monotone_in_mean_and_variance(self):
        grid = np.linspace(-2.0, 2.0, 9)
        variances = np.linspace(0.1, 3.0, 9)
        for gamma in (0.1, 1.0, 5.0):
            for variance in variances:
                values = [er_gaussian(m, variance, gamma) for m in grid]
                assert all(a > b for a, b in zip(values, values[1:]))
            for mean in grid:
                values = [er_gaussian(mean, v, gamma) for v in variances]
                assert all(a < b for a, b in zip(values, values[1:]))

    def test_risk_neutral_offset(self):
        for gamma in (1e-1, 1e-3, 1e-6):
            assert abs(er_gaussian(0.7, 2.0, gamma) + 0.7) == pytest.approx(
                gamma * 2.0 / 2.0, rel=1e-9
            )


@pytest.mark.unit
class TestErEmpirical:
    """Sample entropic risk."""

    def test_constant_sample(self):
        assert er_empirical([3.5, 3.5, 3.5], 1.0) == pytest.approx(-3.5, abs=1e-12)

    def test_zero_sample(self):
        assert er_empirical([0.0, 0.0], 2.0) == pytest.approx(0.0, abs=1e-15)

    def test_empty_sample(self):
        with pytest.raises(DomainError):
            er_empirical([], 1.0)

    def test_non_finite_sample(self):
        with pytest.raises(DomainError):
            er_empirical([0.0, math.nan], 1.0)

    def test_no_overflow_for_large_exponents(self):
        value = er_empirical([-700.0, 700.0, 0.0], 1.0)
        assert math.isfinite(value)
        assert value == pytest.approx(700.0 - math.log(3.0), rel=1e-12)

    def test_matches_closed_form(self, rng):
        samples = rng.normal(0.0, 1.0, 1_000_000)
        assert er_empirical(samples, 0.5) == pytest.approx(0.25, abs=0.01)

    def test_permutation_invariant(self, rng):
        samples = rng.normal(0.2, 1.5, 1000)
        shuffled = rng.permutation(samples)
        assert er_empirical(samples, 0.8) == pytest.approx(
            er_empirical(shuffled, 0.8), rel=1e-12
        )


@pytest.mark.acceptance
class TestErEmpiricalAcrossSeeds:
    """Sample entropic risk converges on the closed form for most seeds."""

    @pytest.mark.parametrize(
        "mean, variance, gamma", [(0.3, 1.0, 1.0), (-1.0, 0.5, 0.25), (2.0, 0.04, 0.8)]
    )
    def test_within_tolerance(self, mean, variance, gamma):
        expected = er_gaussian(mean, variance, gamma)
        hits = 0
        for seed in range(50):
            rng = np.random.default_rng(seed)
            samples = rng.normal(mean, math.sqrt(variance), 1_000_000)
            hits += abs(er_empirical(samples, gamma) - expected) <= 0.01
        assert hits >= 49


@pytest.mark.unit
class TestErGap:
    """Gaps relative to the optimal arm."""

    def test_optimal_arm_has_zero_gap(self, reference_instance):
        assert er_gap(reference_instance, 0) == 0.0

    def test_mean_gap(self, reference_instance):
        assert er_gap(reference_instance, 1) == pytest.approx(1.0)

    def test_variance_gap(self):
        instance = BanditInstance.gaussian(
            means=(0.0, 0.0), variances=(1.0, 2.0), gamma=2.0, sigma_max_sq=3.0
        )
        assert er_gap(instance, 1) == pytest.approx(1.0)

    def test_index_out_of_range(self, reference_instance):
        with pytest.raises(IndexError):
            er_gap(reference_instance, 2)


@pytest.mark.unit
class TestKlGaussian:
    """KL divergence between Gaussian arms."""

    def test_identical_arms(self):
        arm = ArmSpec(mean=0.3, variance=1.7)
        assert kl_gaussian(arm, arm) == 0.0

    def test_mean_shift(self):
        assert kl_gaussian(ArmSpec(mean=0.0, variance=1.0), ArmSpec(mean=1.0, variance=1.0)) == (
            pytest.approx(0.5)
        )

    def test_variance_change(self):
        value = kl_gaussian(ArmSpec(mean=0.0, variance=1.0), ArmSpec(mean=0.0, variance=4.0))
        assert value == pytest.approx(math.log(2.0) + 1.0 / 8.0 - 0.5, abs=1e-12)
        assert value == pytest.approx(0.3181, abs=1e-4)

    def test_non_negative_and_symmetry(self):
        arms = [
            ArmSpec(mean=m, variance=v) for m in (-1.0, 0.0, 2.0) for v in (0.5, 1.0, 3.0)
        ]
        for a in arms:
            for b in arms:
                forward = kl_gaussian(a, b)
                assert forward >= 0.0
                symmetric = forward == pytest.approx(kl_gaussian(b, a), abs=1e-12)
                assert symmetric == (a.variance == b.variance)

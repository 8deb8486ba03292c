# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Tests for the Normal-Gamma update, batch oracle and posterior sampling."""

# Standard library imports
import math

# Third-party imports
import numpy as np
import pytest

# Local/package imports
from entropic_bandits.exceptions import DomainError, PreconditionError
from entropic_bandits.models.posterior import PosteriorState
from entropic_bandits.posterior import (
    batch_posterior,
    fold_updates,
    sample_posterior,
    update,
)


def _as_tuple(state):
    return (state.mu_hat, state.t_count, state.alpha, state.beta)


@pytest.mark.unit
class TestUpdate:
    """Sequential Normal-Gamma update."""

    def test_first_sample_from_prior(self):
        assert _as_tuple(update(PosteriorState.prior(), 3.0)) == (3.0, 1, 1.0, 0.5)

    def test_second_sample(self):
        state = update(update(PosteriorState.prior(), 3.0), 1.0)
        assert _as_tuple(state) == (2.0, 2, 1.5, 1.5)

    def test_repeated_value_adds_no_spread(self):
        state = PosteriorState(mu_hat=2.5, t_count=4, alpha=2.5, beta=1.25)
        assert _as_tuple(update(state, 2.5)) == (2.5, 5, 3.0, 1.25)

    def test_input_not_mutated(self):
        state = PosteriorState.prior()
        update(state, 4.0)
        assert _as_tuple(state) == (0.0, 0, 0.5, 0.5)

    @pytest.mark.parametrize("x", [math.nan, math.inf, -math.inf])
    def test_non_finite_observation(self, x):
        with pytest.raises(DomainError):
            update(PosteriorState.prior(), x)

    def test_alpha_after_n_updates(self, rng):
        state = fold_updates(rng.normal(size=37))
        assert state.alpha == 0.5 + 37 / 2

    def test_beta_non_decreasing(self, rng):
        state = PosteriorState.prior()
        for x in rng.normal(0.0, 3.0, 200):
            new_state = update(state, float(x))
            assert new_state.beta >= state.beta
            state = new_state


@pytest.mark.unit
class TestBatchPosterior:
    """The batch oracle and its agreement with the sequential update."""

    def test_empty_is_prior(self):
        assert _as_tuple(batch_posterior([])) == (0.0, 0, 0.5, 0.5)

    def test_two_samples(self):
        assert _as_tuple(batch_posterior([3.0, 1.0])) == (2.0, 2, 1.5, 1.5)

    def test_constant_samples(self):
        assert _as_tuple(batch_posterior([1.25] * 8)) == (1.25, 8, 4.5, 0.5)

    def test_sequential_matches_batch(self, rng):
        for _ in range(50):
            length = int(rng.integers(1, 2000))
            samples = rng.uniform(-1e6, 1e6, length)
            sequential = fold_updates(samples)
            batch = batch_posterior(samples)
            assert sequential.t_count == batch.t_count
            assert sequential.alpha == batch.alpha
            assert sequential.mu_hat == pytest.approx(batch.mu_hat, rel=1e-10, abs=1e-4)
            assert sequential.beta == pytest.approx(batch.beta, rel=1e-10)

    def test_permutation_invariance(self, rng):
        samples = rng.normal(5.0, 2.0, 500)
        a = fold_updates(samples)
        b = fold_updates(rng.permutation(samples))
        assert a.alpha == b.alpha
        assert a.mu_hat == pytest.approx(b.mu_hat, rel=1e-12)
        assert a.beta == pytest.approx(b.beta, rel=1e-9)


@pytest.mark.unit
class TestSamplePosterior:
    """Posterior draws."""

    def test_unplayed_arm_rejected(self, rng):
        with pytest.raises(PreconditionError):
            sample_posterior(PosteriorState.prior(), rng)

    def test_deterministic_given_stream(self):
        state = PosteriorState(mu_hat=0.4, t_count=3, alpha=2.0, beta=1.7)
        first = sample_posterior(state, np.random.default_rng(99))
        second = sample_posterior(state, np.random.default_rng(99))
        assert first == second

    def test_kappa_drawn_before_theta(self):
        state = PosteriorState(mu_hat=0.4, t_count=3, alpha=2.0, beta=1.7)
        sample = sample_posterior(state, np.random.default_rng(5))
        reference = np.random.default_rng(5)
        kappa = reference.gamma(2.0, 1.0 / 1.7)
        theta = reference.normal(0.4, 1.0 / math.sqrt(3))
        assert (sample.kappa, sample.theta) == (kappa, theta)

    def test_kappa_mean(self, rng):
        state = PosteriorState(mu_hat=0.0, t_count=1, alpha=1.0, beta=0.5)
        kappas = [sample_posterior(state, rng).kappa for _ in range(200_000)]
        # Gamma(1, rate 1/2) has mean 2 and standard deviation 2
        assert np.mean(kappas) == pytest.approx(2.0, abs=0.02)

    def test_concentrates_on_truth(self, rng):
        mean, variance = 0.7, 2.0
        state = fold_updates(rng.normal(mean, math.sqrt(variance), 100_000))
        draws = [sample_posterior(state, rng) for _ in range(2000)]
        thetas = np.array([d.theta for d in draws])
        inverse_kappas = 1.0 / np.array([d.kappa for d in draws])
        assert thetas.mean() == pytest.approx(mean, abs=0.02)
        assert inverse_kappas.mean() == pytest.approx(variance, abs=0.05)

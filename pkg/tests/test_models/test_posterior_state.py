# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Tests for posterior state and sample models."""

# Third-party imports
import pytest

from pydantic import ValidationError

# Local/package imports
from entropic_bandits.models.posterior import PosteriorSample, PosteriorState


@pytest.mark.unit
class TestPosteriorState:
    """PosteriorState invariants."""

    def test_prior(self):
        prior = PosteriorState.prior()
        assert (prior.mu_hat, prior.t_count, prior.alpha, prior.beta) == (0.0, 0, 0.5, 0.5)
        assert prior.precision_estimate == 1.0

    def test_alpha_tracks_count(self):
        with pytest.raises(ValidationError, match="alpha"):
            PosteriorState(mu_hat=1.0, t_count=2, alpha=1.0, beta=1.0)

    def test_beta_floor(self):
        with pytest.raises(ValidationError, match="beta"):
            PosteriorState(mu_hat=1.0, t_count=1, alpha=1.0, beta=0.25)

    def test_unplayed_mean_is_zero(self):
        with pytest.raises(ValidationError, match="mu_hat"):
            PosteriorState(mu_hat=0.5)

    def test_negative_count(self):
        with pytest.raises(ValidationError):
            PosteriorState(t_count=-1, alpha=0.0)


@pytest.mark.unit
class TestPosteriorSample:
    """PosteriorSample scoring."""

    def test_entropic_risk(self):
        sample = PosteriorSample(theta=1.0, kappa=2.0)
        assert sample.entropic_risk(1.0) == pytest.approx(-0.75)

    def test_kappa_positive(self):
        with pytest.raises(ValidationError):
            PosteriorSample(theta=0.0, kappa=0.0)

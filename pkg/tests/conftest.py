# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""
Reusable pytest fixtures for entropic-bandit tests.
"""
# Third-party imports
import numpy as np
import pytest

# Local/package imports
from entropic_bandits.models.config import ExperimentConfig
from entropic_bandits.models.instance import BanditInstance


@pytest.fixture
def reference_instance():
    """Two arms N(1, 1) and N(0, 1) with gamma = 1: gap 1, optimal arm 0."""
    return BanditInstance.gaussian(
        means=(1.0, 0.0), variances=(1.0, 1.0), gamma=1.0, sigma_max_sq=2.0
    )


@pytest.fixture
def three_arm_instance():
    """Three arms with distinct means and variances, optimal arm 0."""
    return BanditInstance.gaussian(
        means=(1.0, 0.5, 0.8),
        variances=(0.5, 1.0, 1.5),
        gamma=0.5,
        sigma_max_sq=2.0,
    )


@pytest.fixture
def rng():
    """A fixed-seed random stream."""
    return np.random.default_rng(12345)


@pytest.fixture
def minimal_config_dict(tmp_path):
    """Smallest useful experiment configuration, writing under tmp_path."""
    return {
        "instance": {
            "arms": [{"mean": 1.0, "variance": 1.0}, {"mean": 0.0, "variance": 1.0}],
            "gamma": 1.0,
            "sigma_max_sq": 2.0,
        },
        "horizon": 100,
        "n_runs": 2,
        "root_seed": 7,
        "checkpoints": [10, 50, 100],
        "output": {"directory": str(tmp_path / "out")},
    }


@pytest.fixture
def minimal_config(minimal_config_dict):
    """The minimal configuration as a validated model."""
    return ExperimentConfig.model_validate(minimal_config_dict)

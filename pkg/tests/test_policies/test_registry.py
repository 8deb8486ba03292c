# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Tests for the policy registry."""

# Third-party imports
import pytest

# Local/package imports
from entropic_bandits.exceptions import DomainError
from entropic_bandits.policies import (
    EpsilonGreedyErPolicy,
    ErtsPolicy,
    Policy,
    build_policy,
    get_policy_names,
    register_policy,
)
from entropic_bandits.policies.base import _policies, argmin_decision


@pytest.mark.unit
class TestRegistry:
    """register_policy and build_policy."""

    def test_builtin_names(self):
        assert {"erts", "uniform", "epsilon_greedy_er", "ftl_er"} <= set(get_policy_names())

    def test_build_by_name(self):
        policy = build_policy("erts", 1.0)
        assert isinstance(policy, ErtsPolicy)
        assert policy.name == "erts"

    def test_build_with_params(self):
        policy = build_policy("epsilon_greedy_er", 0.5, epsilon=0.2)
        assert isinstance(policy, EpsilonGreedyErPolicy)
        assert policy.params == {"epsilon": 0.2}

    def test_unknown_name(self):
        with pytest.raises(DomainError, match="unknown policy"):
            build_policy("thompson", 1.0)

    def test_unexpected_param(self):
        with pytest.raises(DomainError, match="invalid parameters"):
            build_policy("erts", 1.0, epsilon=0.1)

    def test_invalid_gamma(self):
        with pytest.raises(DomainError):
            build_policy("uniform", 0.0)

    def test_register_custom_policy(self):
        @register_policy("always_first_test")
        class AlwaysFirst(Policy):
            def choose(self, states, rng):
                return argmin_decision([0.0] + [1.0] * (len(states) - 1))

        try:
            assert isinstance(build_policy("always_first_test", 1.0), AlwaysFirst)
            assert AlwaysFirst.name == "always_first_test"
        finally:
            _policies.pop("always_first_test")

    def test_duplicate_name_rejected(self):
        with pytest.raises(ValueError, match="already registered"):

            @register_policy("erts")
            class Other(Policy):
                def choose(self, states, rng):
                    raise NotImplementedError

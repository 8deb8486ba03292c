# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Bandit decision rules and the episode loop.

Importing this package registers every built-in policy.
"""

# Local/package imports
from entropic_bandits.policies.base import (
    Policy,
    build_policy,
    get_policy_names,
    register_policy,
)
from entropic_bandits.policies.baselines import (
    EpsilonGreedyErPolicy,
    FtlErPolicy,
    UniformPolicy,
    baseline_choose,
    plug_in_risks,
)
from entropic_bandits.policies.episode import run_episode
from entropic_bandits.policies.erts import ErtsPolicy, erts_choose, erts_episode

__all__ = [
    "Policy",
    "register_policy",
    "build_policy",
    "get_policy_names",
    "ErtsPolicy",
    "erts_choose",
    "erts_episode",
    "UniformPolicy",
    "EpsilonGreedyErPolicy",
    "FtlErPolicy",
    "baseline_choose",
    "plug_in_risks",
    "run_episode",
]

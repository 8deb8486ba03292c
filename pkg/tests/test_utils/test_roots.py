# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Tests for bracket expansion and bisection."""

# Standard library imports
import math

# Third-party imports
import pytest

# Local/package imports
from entropic_bandits.exceptions import DomainError
from entropic_bandits.utils.roots import bisect_root, expand_bracket


@pytest.mark.unit
class TestExpandBracket:
    def test_returns_start_when_already_above(self):
        assert expand_bracket(lambda x: x, 5.0, lambda x: 2 * x, 1.0) == 5.0

    def test_doubles_until_crossed(self):
        assert expand_bracket(lambda x: x, 1.0, lambda x: 2 * x, 10.0) == 16.0

    def test_never_crossed(self):
        with pytest.raises(DomainError):
            expand_bracket(lambda x: 0.0, 1.0, lambda x: x + 1.0, 1.0)


@pytest.mark.unit
class TestBisectRoot:
    def test_square_root(self):
        root = bisect_root(lambda x: x * x - 2.0, 0.0, 2.0, 1e-13)
        assert root == pytest.approx(math.sqrt(2.0), abs=1e-12)

    def test_no_sign_change(self):
        with pytest.raises(ValueError):
            bisect_root(lambda x: x * x + 1.0, 0.0, 2.0, 1e-13)

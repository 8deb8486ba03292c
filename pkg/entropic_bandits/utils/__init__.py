# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Numerical helpers: bracketed root finding and random stream splitting."""

# Local/package imports
from entropic_bandits.utils.roots import bisect_root, expand_bracket
from entropic_bandits.utils.seeding import split_stream

__all__ = ["bisect_root", "expand_bracket", "split_stream"]

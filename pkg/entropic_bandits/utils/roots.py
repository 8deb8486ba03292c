# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""
Bracketed bisection for monotone scalar functions.

Brackets are grown geometrically from a starting point until the target
level is crossed, then handed to scipy's bisection.
"""

# Standard library imports
import logging

from typing import Callable

# Third-party imports
from scipy.optimize import bisect

# Local/package imports
from entropic_bandits.exceptions import DomainError

logger = logging.getLogger(__name__)

MAX_EXPANSIONS = 2000
MAX_BISECTIONS = 400


def expand_bracket(
    func: Callable[[float], float],
    start: float,
    step: Callable[[float], float],
    level: float,
) -> float:
    """
    Move ``start`` with ``step`` until ``func`` exceeds ``level``.

    Args:
        func: Monotone function along the direction of ``step``
        start: First bracket end to try
        step: Maps the current end to the next, more extreme one
        level: Value the function has to exceed

    Returns:
        The first end at which func(end) > level

    Raises:
        DomainError: If the level is not crossed within MAX_EXPANSIONS steps
    """
    end = start
    for _ in range(MAX_EXPANSIONS):
        if func(end) > level:
            return end
        end = step(end)
    raise DomainError(f"bracket expansion did not cross level {level!r}")


def bisect_root(
    func: Callable[[float], float],
    lower: float,
    upper: float,
    xtol: float,
) -> float:
    """
    Root of ``func`` on [lower, upper] by bisection.

    Args:
        func: Continuous function with a sign change on the interval
        lower: Left end
        upper: Right end
        xtol: Absolute tolerance on the root

    Returns:
        The root, accurate to xtol plus scipy's default relative tolerance
    """
    root = bisect(func, lower, upper, xtol=xtol, maxiter=MAX_BISECTIONS)
    logger.debug(
        "Bisection converged",
        extra={"lower": lower, "upper": upper, "root": root},
    )
    return float(root)

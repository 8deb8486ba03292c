# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Exception hierarchy for entropic-risk bandit simulation and theory."""

# Standard library imports
from typing import Optional


class BanditError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BanditError, ValueError):
    """Raised when a numeric input is outside the domain of an operation."""


class PreconditionError(BanditError):
    """Raised when an operation is called in a state it does not allow.

    Sampling the posterior of an arm that has never been played is the
    canonical case.
    """


class InfeasibleConstantError(DomainError):
    """Raised when a theory constant's h-argument leaves its domain."""

    def __init__(self, message: str, arm_index: Optional[int] = None):
        """
        Initialize the error.

        Args:
            message: Human readable description
            arm_index: Arm whose constant is infeasible, when known
        """
        super().__init__(message)
        self.arm_index = arm_index


class SimulationError(BanditError):
    """Raised when a Monte Carlo run cannot be completed."""


class ConfigError(BanditError, ValueError):
    """Raised when an experiment configuration fails validation.

    The ``field`` attribute holds the dotted path of the offending field
    (for example ``instance.arms.1.variance``) so the CLI can name it.
    """

    def __init__(self, message: str, field: str = ""):
        """
        Initialize the error.

        Args:
            message: Human readable description
            field: Dotted path of the offending configuration field
        """
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field
        self.detail = message

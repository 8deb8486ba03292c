# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""
Deterministic random streams for Monte Carlo runs.

Run k under root seed s draws from::

    Generator(PCG64(SeedSequence(entropy=s, spawn_key=(k,))))

which is the stream ``SeedSequence(s).spawn(...)`` hands to its k-th child,
so streams are independent across runs and do not depend on how many runs
are requested or how they are scheduled.
"""

# Third-party imports
from numpy.random import PCG64, Generator, SeedSequence

# Local/package imports
from entropic_bandits.exceptions import DomainError

MAX_SEED = 2**64


def split_stream(root_seed: int, run_index: int) -> Generator:
    """
    Random stream for one run.

    Args:
        root_seed: Unsigned 64-bit root seed
        run_index: Non-negative run index

    Returns:
        A fresh PCG64 generator

    Raises:
        DomainError: If the seed or index is out of range
    """
    if not 0 <= root_seed < MAX_SEED:
        raise DomainError(f"root_seed must be an unsigned 64-bit integer, got {root_seed!r}")
    if run_index < 0:
        raise DomainError(f"run_index must be >= 0, got {run_index!r}")
    return Generator(PCG64(SeedSequence(entropy=root_seed, spawn_key=(run_index,))))

# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Whitespace-delimited plot data: one row per round, mean and std per policy."""

# Standard library imports
from typing import Sequence

# Third-party imports
import numpy as np

# Local/package imports
from entropic_bandits.encoders.base import Encoder
from entropic_bandits.encoders.csv_encoder import format_float
from entropic_bandits.exceptions import DomainError
from entropic_bandits.models.results import AggregateResult


class PlotDataEncoder(Encoder[Sequence[AggregateResult], str]):
    """Encoder for regret curves readable by gnuplot, numpy.loadtxt and friends.

    The header line starts with ``#`` and names the columns
    ``round <policy>_mean <policy>_std ...``.
    """

    def encode(self, model: Sequence[AggregateResult]) -> str:
        if not model:
            raise DomainError("no aggregates to encode")
        horizon = model[0].horizon
        if any(aggregate.horizon != horizon for aggregate in model):
            raise DomainError("aggregates must share the same horizon")
        header = ["round"]
        for aggregate in model:
            header += [f"{aggregate.policy}_mean", f"{aggregate.policy}_std"]
        columns = np.column_stack(
            [
                column
                for aggregate in model
                for column in (
                    aggregate.mean_regret_trajectory,
                    aggregate.std_regret_trajectory,
                )
            ]
        )
        lines = ["# " + " ".join(header)]
        for index, values in enumerate(columns.tolist()):
            lines.append(
                " ".join([str(index + 1)] + [format_float(v) for v in values])
            )
        return "\n".join(lines) + "\n"

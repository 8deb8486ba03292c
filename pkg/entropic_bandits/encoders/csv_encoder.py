# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""CSV encoder for the regret-versus-theory table."""

# Standard library imports
import csv
import io
import math

from typing import Optional, Sequence

# Local/package imports
from entropic_bandits.encoders.base import Encoder
from entropic_bandits.exceptions import DomainError
from entropic_bandits.models.results import ComparisonRow

CSV_COLUMNS = (
    "policy",
    "n",
    "mean_regret",
    "std_regret",
    "regret_over_log_n",
    "theory_upper",
    "theory_lower",
)


def format_float(value: Optional[float]) -> str:
    """Shortest round-trip text of a float; empty for a missing value."""
    if value is None:
        return ""
    if not math.isfinite(value):
        raise DomainError(f"refusing to write non-finite value {value!r}")
    return repr(float(value))


class CSVEncoder(Encoder[Sequence[ComparisonRow], str]):
    """Encoder that writes comparison rows with the fixed column set."""

    def encode(self, model: Sequence[ComparisonRow]) -> str:
        """
        Encode comparison rows to CSV text.

        Args:
            model: Rows in output order

        Returns:
            CSV text with a header line
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in model:
            writer.writerow(
                [
                    row.policy,
                    str(row.n),
                    format_float(row.mean_regret),
                    format_float(row.std_regret),
                    format_float(row.regret_over_log_n),
                    format_float(row.theory_upper),
                    format_float(row.theory_lower),
                ]
            )
        return buffer.getvalue()

# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Encoders turning models into result files."""

# Local/package imports
from entropic_bandits.encoders.base import Encoder
from entropic_bandits.encoders.csv_encoder import CSV_COLUMNS, CSVEncoder
from entropic_bandits.encoders.json_encoder import JSONEncoder, emit_config, to_jsonable
from entropic_bandits.encoders.plot_data_encoder import PlotDataEncoder

__all__ = [
    "Encoder",
    "JSONEncoder",
    "CSVEncoder",
    "CSV_COLUMNS",
    "PlotDataEncoder",
    "emit_config",
    "to_jsonable",
]

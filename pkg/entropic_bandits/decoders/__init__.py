# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Decoders turning raw input into validated models."""

# Local/package imports
from entropic_bandits.decoders.base import Decoder
from entropic_bandits.decoders.config_decoder import (
    ConfigDecoder,
    config_error_from,
    parse_config,
)

__all__ = ["Decoder", "ConfigDecoder", "config_error_from", "parse_config"]

# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""JSON encoder implementation."""

# Standard library imports
import math

from typing import Any

# Third-party imports
import numpy as np
import orjson

from pydantic import BaseModel

# Local/package imports
from entropic_bandits.encoders.base import Encoder
from entropic_bandits.exceptions import DomainError
from entropic_bandits.models.config import ExperimentConfig
from entropic_bandits.models.theory import SCHEMA_VERSION

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS


def to_jsonable(obj: Any, path: str = "$") -> Any:
    """
    Convert models, numpy values and containers into plain JSON types.

    Dictionary keys become strings. Floats are checked to be finite.

    Raises:
        DomainError: If a non-finite number is found, naming its path
    """
    if isinstance(obj, BaseModel):
        return to_jsonable(obj.model_dump(), path)
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value, f"{path}.{key}") for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(value, f"{path}[{i}]") for i, value in enumerate(obj)]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist(), path)
    if isinstance(obj, np.generic):
        return to_jsonable(obj.item(), path)
    if isinstance(obj, float) and not math.isfinite(obj):
        raise DomainError(f"non-finite number at {path}")
    return obj


class JSONEncoder(Encoder[BaseModel, bytes]):
    """Encoder that serializes report models to canonical JSON bytes.

    Keys are sorted and indented so that equal models give equal bytes, and
    every document carries a ``schema_version``.
    """

    def encode(self, model: BaseModel) -> bytes:
        """
        Encode a model to JSON.

        Args:
            model: The model to encode

        Returns:
            UTF-8 JSON with a trailing newline

        Raises:
            DomainError: If the model holds a non-finite number
        """
        data = to_jsonable(model)
        data.setdefault("schema_version", SCHEMA_VERSION)
        return orjson.dumps(data, option=JSON_OPTIONS | orjson.OPT_APPEND_NEWLINE)


def emit_config(config: ExperimentConfig) -> bytes:
    """Canonical JSON for a configuration; ``parse_config`` reads it back unchanged."""
    return orjson.dumps(
        to_jsonable(config), option=JSON_OPTIONS | orjson.OPT_APPEND_NEWLINE
    )

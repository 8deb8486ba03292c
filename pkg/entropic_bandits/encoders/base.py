# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Base interface for result-file encoders."""

# Standard library imports
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, TypeVar, Union

T = TypeVar("T")
U = TypeVar("U", str, bytes)


class Encoder(Generic[T, U], ABC):
    """Base class for encoders producing text or bytes from result models."""

    @abstractmethod
    def encode(self, model: T) -> U:
        """
        Encode a model into the output format.

        Args:
            model: The model to encode.

        Returns:
            The encoded document.
        """

    def write(self, model: T, path: Union[str, Path]) -> int:
        """
        Encode a model and write it to ``path``, text as UTF-8.

        Returns:
            Number of bytes written
        """
        encoded = self.encode(model)
        data = encoded.encode("utf-8") if isinstance(encoded, str) else encoded
        Path(path).write_bytes(data)
        return len(data)

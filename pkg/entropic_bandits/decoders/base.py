# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Base decoder interface for all decoders."""

# Standard library imports
from abc import ABC, abstractmethod
from typing import Any, Generic, Optional, TypeVar

# Local/package imports
from entropic_bandits.models.base import BanditBaseModel

T = TypeVar("T", bound=BanditBaseModel)


class Decoder(Generic[T], ABC):
    """
    Abstract base class for decoders that turn raw input into models.

    Generic type T must be a subclass of BanditBaseModel.
    """

    def _set_trace_attributes(
        self,
        span,
        attributes: Optional[dict] = None,
        events: Optional[list] = None,
    ) -> None:
        """
        Set OpenTelemetry span attributes and add events for decoder operations.

        Args:
            span: The current OpenTelemetry span
            attributes: Attributes to set on the span
            events: Events to add, each a name or a (name, attributes) tuple
        """
        if attributes:
            for key, value in attributes.items():
                span.set_attribute(key, value)
        if events:
            for event in events:
                if isinstance(event, tuple) and len(event) == 2:
                    event_name, event_attrs = event
                    span.add_event(event_name, event_attrs)
                elif isinstance(event, str):
                    span.add_event(event)

    @abstractmethod
    def decode(self, raw_data: Any) -> T:
        """
        Decode raw data into a model.

        Args:
            raw_data: The raw data to decode.

        Returns:
            A validated model instance.
        """

# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Decoder for JSON experiment configurations."""

# Standard library imports
import logging

from pathlib import Path
from typing import Any, Mapping, Union

# Third-party imports
import orjson

from opentelemetry import trace
from opentelemetry.trace import Status, StatusCode
from pydantic import ValidationError

# Local/package imports
from entropic_bandits.decoders.base import Decoder
from entropic_bandits.exceptions import ConfigError
from entropic_bandits.models.config import ExperimentConfig

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)


def config_error_from(exc: ValidationError) -> ConfigError:
    """
    Convert the first pydantic error into a ConfigError naming its field.

    Errors raised as ConfigError inside validators keep their own field
    path; all others use the dotted pydantic location.
    """
    error = exc.errors()[0]
    cause = error.get("ctx", {}).get("error")
    if isinstance(cause, ConfigError):
        return ConfigError(cause.detail, field=cause.field)
    field = ".".join(str(part) for part in error.get("loc", ()))
    return ConfigError(error.get("msg", str(exc)), field=field)


class ConfigDecoder(Decoder[ExperimentConfig]):
    """Decoder that turns a JSON document into a validated ExperimentConfig."""

    @tracer.start_as_current_span("ConfigDecoder.decode")
    def decode(self, raw_data: Union[bytes, str, Mapping[str, Any]]) -> ExperimentConfig:
        """
        Parse and validate a configuration.

        Args:
            raw_data: JSON bytes or text, or an already parsed mapping

        Returns:
            The validated configuration

        Raises:
            ConfigError: If the document is not JSON or fails validation
        """
        span = trace.get_current_span()
        if isinstance(raw_data, (bytes, str)):
            try:
                document = orjson.loads(raw_data)
            except orjson.JSONDecodeError as exc:
                span.set_status(Status(StatusCode.ERROR, "invalid JSON"))
                raise ConfigError(f"invalid JSON: {exc}", field="config") from exc
        else:
            document = raw_data
        if not isinstance(document, Mapping):
            span.set_status(Status(StatusCode.ERROR, "not an object"))
            raise ConfigError("must be a JSON object", field="config")
        try:
            config = ExperimentConfig.model_validate(document)
        except ValidationError as exc:
            error = config_error_from(exc)
            span.set_status(Status(StatusCode.ERROR, str(error)))
            logger.debug(
                "Configuration rejected",
                extra={"field": error.field, "detail": error.detail},
            )
            raise error from exc
        self._set_trace_attributes(
            span,
            attributes={
                "bandit.arms": config.instance.n_arms,
                "bandit.gamma": config.instance.gamma,
                "run.horizon": config.horizon,
                "run.n_runs": config.n_runs,
            },
        )
        return config

    def decode_file(self, path: Union[str, Path]) -> ExperimentConfig:
        """
        Read and decode a configuration file.

        Raises:
            ConfigError: If the file cannot be read or decoded
        """
        try:
            raw = Path(path).read_bytes()
        except OSError as exc:
            raise ConfigError(f"cannot read {path}: {exc.strerror}", field="config") from exc
        return self.decode(raw)

    @staticmethod
    def apply_overrides(config: ExperimentConfig, **overrides: Any) -> ExperimentConfig:
        """
        Replace top-level fields and re-validate.

        Raises:
            ConfigError: If the overridden configuration is invalid
        """
        try:
            return config.with_overrides(**overrides)
        except ValidationError as exc:
            raise config_error_from(exc) from exc


def parse_config(raw_data: Union[bytes, str]) -> ExperimentConfig:
    """Decode a JSON configuration document."""
    return ConfigDecoder().decode(raw_data)

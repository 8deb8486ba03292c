# -*- coding: utf-8 -*-
# SPDX-License-Identifier: BSL-1.1
# Copyright (c) 2025 Ziggiz Inc.
#
# This file is part of entropic-risk-bandits and is licensed under the
# Business Source License 1.1. You may not use this file except in
# compliance with the License.
#
"""Base model shared by every domain type."""

# Third-party imports
from pydantic import BaseModel as PydanticBaseModel
from pydantic import ConfigDict


class BanditBaseModel(PydanticBaseModel):
    """Base model for all bandit data models.

    Models are immutable values: operations return new instances instead of
    mutating their inputs. Arbitrary types are allowed so that trajectories
    can be carried as numpy arrays.
    """

    model_config = ConfigDict(
        frozen=True,
        arbitrary_types_allowed=True,
        extra="forbid",
    )

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from typing import Any, Optional

from .base import HydraFormerException


class ConfigError(HydraFormerException):
    """Raised for an invalid or inconsistent configuration value."""

    def __init__(self, message: str, key: Optional[str] = None, **kwargs: Any) -> None:
        self.key = key
        if key is not None:
            message = '%s: %s' % (key, message)
        super().__init__(message, **kwargs)


class UsageError(HydraFormerException):
    """Raised for command line misuse and API preconditions the caller violated."""
    pass

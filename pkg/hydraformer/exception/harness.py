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


class CheckpointError(HydraFormerException):
    """Raised for unreadable, inconsistent or incompatible checkpoints."""

    def __init__(
            self,
            path: str,
            reason: str,
            offender: Optional[str] = None,
            **kwargs: Any,
    ) -> None:
        self.path = path
        self.offender = offender
        super().__init__(
            '%s: %s%s' % (path, '' if offender is None else offender + ': ', reason),
            **kwargs,
        )


class ManifestError(HydraFormerException):
    """Raised when a dataset manifest disagrees with its feature files."""

    def __init__(self, path: str, reason: str, **kwargs: Any) -> None:
        self.path = path
        super().__init__('%s: %s' % (path, reason), **kwargs)


class SelectorError(HydraFormerException):
    """Raised when a parameter selector does not resolve identically across checkpoints."""

    def __init__(self, selector: str, reason: str, **kwargs: Any) -> None:
        self.selector = selector
        super().__init__('%s: %s' % (selector, reason), **kwargs)


class BenchError(HydraFormerException):
    pass

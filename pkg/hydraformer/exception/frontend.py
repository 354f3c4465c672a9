# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from typing import Any

from .base import HydraFormerException


class TooShortError(HydraFormerException):
    """Raised when an utterance has too few frames for a subsampling branch."""

    def __init__(self, frames: int, factor: int, **kwargs: Any) -> None:
        self.frames = frames
        self.factor = factor
        super().__init__(
            'utterance of %d frames is too short for subsampling factor %d' % (frames, factor),
            **kwargs,
        )

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


class InfeasibleTargetError(HydraFormerException):
    """Raised when no CTC alignment of the target fits in the available frames."""

    def __init__(self, frames: int, target_length: int, required: int, **kwargs: Any) -> None:
        self.frames = frames
        self.target_length = target_length
        self.required = required
        super().__init__(
            'target of %d tokens needs at least %d frames, got %d' % (
                target_length, required, frames,
            ),
            **kwargs,
        )

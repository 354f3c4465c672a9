# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from typing import Any, Optional, Tuple

from .base import HydraFormerException


class DimensionError(HydraFormerException):
    """Raised when operand shapes are incompatible with an op."""

    def __init__(
            self,
            op: str,
            shapes: Tuple[Tuple[int, ...], ...],
            reason: Optional[str] = None,
            **kwargs: Any,
    ) -> None:
        self.op = op
        self.shapes = shapes
        super().__init__(
            '%s got shapes %s%s' % (
                op,
                ', '.join(str(s) for s in shapes),
                '' if reason is None else ' (%s)' % reason,
            ),
            **kwargs,
        )


class NonFiniteError(HydraFormerException):
    """Raised when an op turns finite inputs into NaN or Inf."""

    def __init__(self, op: str, **kwargs: Any) -> None:
        self.op = op
        super().__init__('%s produced non-finite values from finite inputs' % op, **kwargs)

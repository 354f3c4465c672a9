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


class NonFiniteLossError(HydraFormerException):
    """Raised when a training step produces a non-finite loss.

    The step is aborted before any parameter or optimizer moment changes.
    """

    def __init__(self, step: int, branch: int, **kwargs: Any) -> None:
        self.step = step
        self.branch = branch
        super().__init__('non-finite loss at step %d on branch %d' % (step, branch), **kwargs)


class TrainingHalted(HydraFormerException):
    """Raised after too many consecutive non-finite training steps."""

    def __init__(self, step: int, consecutive: int, **kwargs: Any) -> None:
        self.step = step
        self.consecutive = consecutive
        super().__init__(
            'halted at step %d after %d consecutive non-finite steps' % (step, consecutive),
            **kwargs,
        )


class TransferError(HydraFormerException):
    """Raised when checkpoint weights cannot initialize a target parameter."""

    def __init__(self, parameter: str, reason: str, **kwargs: Any) -> None:
        self.parameter = parameter
        super().__init__('%s: %s' % (parameter, reason), **kwargs)


class LockError(HydraFormerException):
    """Raised when a run directory is already owned by another writer."""

    def __init__(self, path: str, owner: str, **kwargs: Any) -> None:
        self.path = path
        self.owner = owner
        super().__init__('%s is held by pid %s' % (path, owner), **kwargs)

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from .base import HydraFormerException
from .model import VocabError
from .config import ConfigError, UsageError
from .tensor import NonFiniteError, DimensionError
from .harness import BenchError, SelectorError, ManifestError, CheckpointError
from .frontend import TooShortError
from .training import (
    LockError, TransferError, TrainingHalted, NonFiniteLossError,
)
from .objectives import InfeasibleTargetError


__all__ = [
    'HydraFormerException',
    'ConfigError',
    'UsageError',
    'DimensionError',
    'NonFiniteError',
    'TooShortError',
    'VocabError',
    'InfeasibleTargetError',
    'NonFiniteLossError',
    'TrainingHalted',
    'TransferError',
    'LockError',
    'CheckpointError',
    'ManifestError',
    'SelectorError',
    'BenchError',
]

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from .model import ModelState, initialize
from .testing import TestCase
from .harness import gen_synthetic, load_checkpoint, save_checkpoint
from .training import train
from .hydraformer import main, entry_point


__all__ = [
    # PyPi package entry_point.
    'entry_point',
    # Run a subcommand from Python, returns the exit code.
    'main',
    # Unit testing with tiny models and synthetic data.
    'TestCase',
    'ModelState',
    'initialize',
    'train',
    'gen_synthetic',
    'save_checkpoint',
    'load_checkpoint',
]

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Importing this package registers every subcommand on :data:`flags`.
"""
from . import bench, train, viz, decode, gen_data, transfer

__all__ = [
    'train',
    'decode',
    'bench',
    'gen_data',
    'transfer',
    'viz',
]

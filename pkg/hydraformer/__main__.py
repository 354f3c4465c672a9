# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from .hydraformer import entry_point


if __name__ == '__main__':
    entry_point()

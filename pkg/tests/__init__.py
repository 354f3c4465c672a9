# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import logging

from hydraformer.common.constants import DEFAULT_LOG_FORMAT


logging.basicConfig(level=logging.DEBUG, format=DEFAULT_LOG_FORMAT)

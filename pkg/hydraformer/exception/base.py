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


class HydraFormerException(Exception):
    """Top level :exc:`HydraFormerException` exception class.

    Every error raised by hydraformer MUST inherit this base class.
    The command line entry point renders any subclass as a single
    machine parseable line, see :func:`hydraformer.hydraformer.main`.
    """

    def __init__(self, message: Optional[str] = None, **kwargs: Any) -> None:
        super().__init__(message or 'Reason unknown')

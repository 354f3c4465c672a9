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


class VocabError(HydraFormerException):
    """Raised when a token id falls outside the vocabulary."""

    def __init__(self, token: int, vocab_size: int, **kwargs: Any) -> None:
        self.token = token
        self.vocab_size = vocab_size
        super().__init__('token id %d outside vocabulary of size %d' % (token, vocab_size), **kwargs)

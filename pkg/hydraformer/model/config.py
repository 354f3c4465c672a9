# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from typing import NamedTuple

from ..exception import ConfigError
from ..common.constants import (
    BLANK_ID, EOS_OFFSET, SOS_OFFSET, DEFAULT_HEADS, MIN_VOCAB_SIZE,
    DEFAULT_FFN_DIM, DEFAULT_MODEL_DIM, DEFAULT_VOCAB_SIZE, DEFAULT_DROPOUT_RATE,
    DEFAULT_ENCODER_BLOCKS, DEFAULT_DEPTHWISE_KERNEL, DEFAULT_DECODER_BLOCKS_L2R,
    DEFAULT_DECODER_BLOCKS_R2L,
)


L2R = 'l2r'
R2L = 'r2l'
DIRECTIONS = (L2R, R2L)


class EncoderConfig(NamedTuple):
    num_blocks: int = DEFAULT_ENCODER_BLOCKS
    model_dim: int = DEFAULT_MODEL_DIM
    heads: int = DEFAULT_HEADS
    ffn_dim: int = DEFAULT_FFN_DIM
    depthwise_kernel: int = DEFAULT_DEPTHWISE_KERNEL
    dropout_rate: float = DEFAULT_DROPOUT_RATE

    def validate(self) -> 'EncoderConfig':
        if self.num_blocks < 0:
            raise ConfigError('must be >= 0', key='encoder.num_blocks')
        if self.heads < 1 or self.model_dim % self.heads:
            raise ConfigError(
                'model_dim %d is not divisible by %d heads' % (self.model_dim, self.heads),
                key='encoder.heads',
            )
        if self.depthwise_kernel < 3 or self.depthwise_kernel % 2 == 0:
            raise ConfigError('must be odd and >= 3', key='encoder.depthwise_kernel')
        if self.ffn_dim < 1:
            raise ConfigError('must be positive', key='encoder.ffn_dim')
        if not 0.0 <= self.dropout_rate < 1.0:
            raise ConfigError('must be in [0, 1)', key='encoder.dropout_rate')
        return self


class DecoderConfig(NamedTuple):
    num_blocks_l2r: int = DEFAULT_DECODER_BLOCKS_L2R
    num_blocks_r2l: int = DEFAULT_DECODER_BLOCKS_R2L
    model_dim: int = DEFAULT_MODEL_DIM
    heads: int = DEFAULT_HEADS
    ffn_dim: int = DEFAULT_FFN_DIM
    vocab_size: int = DEFAULT_VOCAB_SIZE
    dropout_rate: float = DEFAULT_DROPOUT_RATE

    @property
    def blank(self) -> int:
        return BLANK_ID

    @property
    def sos(self) -> int:
        return self.vocab_size - SOS_OFFSET

    @property
    def eos(self) -> int:
        return self.vocab_size - EOS_OFFSET

    @property
    def has_r2l(self) -> bool:
        return self.num_blocks_r2l > 0

    def blocks(self, direction: str) -> int:
        return self.num_blocks_l2r if direction == L2R else self.num_blocks_r2l

    def validate(self) -> 'DecoderConfig':
        if self.num_blocks_l2r < 0 or self.num_blocks_r2l < 0:
            raise ConfigError('block counts must be >= 0', key='decoder.num_blocks_r2l')
        if self.heads < 1 or self.model_dim % self.heads:
            raise ConfigError(
                'model_dim %d is not divisible by %d heads' % (self.model_dim, self.heads),
                key='decoder.heads',
            )
        if self.vocab_size < MIN_VOCAB_SIZE:
            raise ConfigError(
                'needs room for blank, sos, eos and one token, got %d' % self.vocab_size,
                key='decoder.vocab_size',
            )
        if self.ffn_dim < 1:
            raise ConfigError('must be positive', key='decoder.ffn_dim')
        if not 0.0 <= self.dropout_rate < 1.0:
            raise ConfigError('must be in [0, 1)', key='decoder.dropout_rate')
        return self

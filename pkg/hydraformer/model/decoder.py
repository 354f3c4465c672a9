# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Bidirectional Transformer decoder: two independent stacks reading the
    target left-to-right and right-to-left.
"""
import math
from typing import List, Optional, Sequence

import numpy as np

from .config import L2R, R2L, DIRECTIONS, DecoderConfig
from .layers import (
    Params, norm, dense, ffn_specs, norm_specs, causal_mask, feed_forward,
    linear_specs, attention_specs, key_padding_mask, multi_head_attention,
)
from ..core.tensor import NORMAL, Tensor, ParamSpec, ParamSpecs, dropout, embedding
from ..exception import UsageError, ConfigError, VocabError
from ..frontend.batch import pad_tokens
from ..frontend.posenc import sinusoid_table
from ..common.types import TokenSeq


def stack_param_specs(config: DecoderConfig, direction: str) -> ParamSpecs:
    d = config.model_dim
    p = 'decoder.%s' % direction
    specs: ParamSpecs = {
        p + '.embed.weight': ParamSpec((config.vocab_size, d), NORMAL),
    }
    for i in range(config.blocks(direction)):
        b = '%s.blocks.%d' % (p, i)
        specs.update(attention_specs(b + '.self_attn', d))
        specs.update(attention_specs(b + '.src_attn', d))
        specs.update(ffn_specs(b + '.ffn', d, config.ffn_dim))
    specs.update(norm_specs(p + '.after_norm', d))
    specs.update(linear_specs('heads.%s' % direction, d, config.vocab_size))
    return specs


def decoder_param_specs(config: DecoderConfig) -> ParamSpecs:
    specs = stack_param_specs(config, L2R)
    if config.has_r2l:
        specs.update(stack_param_specs(config, R2L))
    return specs


def check_tokens(tokens: Sequence[Sequence[int]], vocab_size: int) -> None:
    for seq in tokens:
        for token in seq:
            if not 0 <= token < vocab_size:
                raise VocabError(int(token), vocab_size)


def decoder_inputs(config: DecoderConfig, tokens: Sequence[TokenSeq], direction: str) -> List[TokenSeq]:
    """sos followed by the targets, reversed for the right-to-left stack."""
    return [
        [config.sos] + (list(seq) if direction == L2R else list(reversed(seq)))
        for seq in tokens
    ]


def decoder_targets(config: DecoderConfig, tokens: Sequence[TokenSeq], direction: str) -> List[TokenSeq]:
    """Next-token targets for each decoder position, closed with eos."""
    return [
        (list(seq) if direction == L2R else list(reversed(seq))) + [config.eos]
        for seq in tokens
    ]


def decode_step(
        params: Params,
        config: DecoderConfig,
        memory: Tensor,
        memory_lengths: Sequence[int],
        tokens: Sequence[TokenSeq],
        direction: str,
        training: bool = False,
        rng: Optional[np.random.Generator] = None,
) -> Tensor:
    """Teacher forced next-token logits, (B, U + 1, V).

    tokens are the plain target sequences; sos is prepended here and the
    right-to-left stack consumes them reversed.  Rows are padded with eos
    and the padding positions are left for callers to ignore.
    """
    if direction not in DIRECTIONS:
        raise UsageError('unknown decoder direction %s' % direction)
    if direction == R2L and not config.has_r2l:
        raise ConfigError('right-to-left decoder is disabled', key='decoder.num_blocks_r2l')
    if len(tokens) != memory.shape[0]:
        raise UsageError('%d token rows for a memory batch of %d' % (len(tokens), memory.shape[0]))
    check_tokens(tokens, config.vocab_size)
    ids, _ = pad_tokens(decoder_inputs(config, tokens, direction), config.eos)
    b, length = ids.shape
    d = config.model_dim
    p = 'decoder.%s' % direction
    rate = config.dropout_rate
    x = embedding(params[p + '.embed.weight'].tensor, ids) * math.sqrt(d) \
        + Tensor(sinusoid_table(length, d), dtype=memory.dtype)
    x = dropout(x, rate, rng, training)
    self_mask = causal_mask(length)
    src_mask = key_padding_mask(np.asarray(memory_lengths), memory.shape[1])
    for i in range(config.blocks(direction)):
        blk = '%s.blocks.%d' % (p, i)
        h = norm(params, blk + '.self_attn.norm', x)
        x = x + dropout(
            multi_head_attention(params, blk + '.self_attn', h, h, self_mask, config.heads),
            rate, rng, training,
        )
        h = norm(params, blk + '.src_attn.norm', x)
        x = x + dropout(
            multi_head_attention(params, blk + '.src_attn', h, memory, src_mask, config.heads),
            rate, rng, training,
        )
        h = norm(params, blk + '.ffn.norm', x)
        x = x + dropout(feed_forward(params, blk + '.ffn', h, 'relu', rate, rng, training), rate, rng, training)
    x = norm(params, p + '.after_norm', x)
    return dense(params, 'heads.%s' % direction, x)

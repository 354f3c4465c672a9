# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Conformer style encoder shared by every subsampling branch.
"""
import logging
from typing import Optional, Sequence

import numpy as np

from .config import EncoderConfig
from .layers import (
    Params, norm, dense, ffn_specs, norm_specs, feed_forward, linear_specs,
    attention_specs, key_padding_mask, multi_head_attention,
)
from ..core.tensor import (
    Tensor, ParamSpec, ParamSpecs, glu, swish, dropout, depthwise_conv1d,
)
from ..common.constants import MACARON_SCALE


logger = logging.getLogger(__name__)


def encoder_param_specs(config: EncoderConfig) -> ParamSpecs:
    d = config.model_dim
    specs: ParamSpecs = {}
    for i in range(config.num_blocks):
        p = 'encoder.blocks.%d' % i
        specs.update(ffn_specs(p + '.ffn1', d, config.ffn_dim))
        specs.update(attention_specs(p + '.mhsa', d))
        specs.update(norm_specs(p + '.conv.norm', d))
        specs.update(linear_specs(p + '.conv.pw1', d, 2 * d))
        specs[p + '.conv.dw.weight'] = ParamSpec((d, config.depthwise_kernel), fan_in=config.depthwise_kernel)
        specs[p + '.conv.dw.bias'] = ParamSpec((d,), fan_in=config.depthwise_kernel)
        specs.update(norm_specs(p + '.conv.dw_norm', d))
        specs.update(linear_specs(p + '.conv.pw2', d, d))
        specs.update(ffn_specs(p + '.ffn2', d, config.ffn_dim))
        specs.update(norm_specs(p + '.final_norm', d))
    return specs


def _conv_module(params: Params, p: str, x: Tensor, frame_mask: Tensor) -> Tensor:
    y = glu(dense(params, p + '.pw1', x))
    # zeroed padding keeps it out of the depthwise receptive field of real frames
    y = y * frame_mask
    y = depthwise_conv1d(y, params[p + '.dw.weight'].tensor, params[p + '.dw.bias'].tensor)
    y = swish(norm(params, p + '.dw_norm', y))
    return dense(params, p + '.pw2', y)


def encode(
        params: Params,
        config: EncoderConfig,
        embedding: Tensor,
        lengths: Sequence[int],
        training: bool = False,
        rng: Optional[np.random.Generator] = None,
) -> Tensor:
    """Run the block stack over a (B, T', D) hydra embedding.

    Padded frames never influence real frames: attention masks them as keys
    and the convolution module zeroes them before mixing over time.
    """
    if config.num_blocks == 0:
        return embedding
    b, t, _ = embedding.shape
    attn_mask = key_padding_mask(np.asarray(lengths), t)
    frame_mask = Tensor(
        (np.arange(t)[None, :] < np.asarray(lengths)[:, None])[:, :, None],
        dtype=embedding.dtype,
    )
    rate = config.dropout_rate
    x = embedding
    for i in range(config.num_blocks):
        p = 'encoder.blocks.%d' % i
        x = x + MACARON_SCALE * dropout(
            feed_forward(
                params, p + '.ffn1', norm(params, p + '.ffn1.norm', x), 'swish', rate, rng, training,
            ),
            rate, rng, training,
        )
        h = norm(params, p + '.mhsa.norm', x)
        x = x + dropout(
            multi_head_attention(params, p + '.mhsa', h, h, attn_mask, config.heads),
            rate, rng, training,
        )
        x = x + dropout(
            _conv_module(params, p + '.conv', norm(params, p + '.conv.norm', x), frame_mask),
            rate, rng, training,
        )
        x = x + MACARON_SCALE * dropout(
            feed_forward(
                params, p + '.ffn2', norm(params, p + '.ffn2.norm', x), 'swish', rate, rng, training,
            ),
            rate, rng, training,
        )
        x = norm(params, p + '.final_norm', x)
    logger.debug('Encoded batch of %d x %d frames through %d blocks', b, t, config.num_blocks)
    return x

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Building blocks shared by the encoder and the decoder.
"""
from typing import Mapping, Optional

import numpy as np

from ..core.tensor import (
    ONES, ZEROS, Tensor, ParamSpec, Parameter, ParamSpecs, swish, linear,
    dropout, layer_norm, scaled_dot_attention,
)


Params = Mapping[str, Parameter]


def linear_specs(prefix: str, d_in: int, d_out: int) -> ParamSpecs:
    return {
        prefix + '.weight': ParamSpec((d_in, d_out), fan_in=d_in),
        prefix + '.bias': ParamSpec((d_out,), fan_in=d_in),
    }


def norm_specs(prefix: str, dim: int) -> ParamSpecs:
    return {
        prefix + '.gain': ParamSpec((dim,), ONES),
        prefix + '.offset': ParamSpec((dim,), ZEROS),
    }


def attention_specs(prefix: str, dim: int) -> ParamSpecs:
    specs = norm_specs(prefix + '.norm', dim)
    for proj in ('q', 'k', 'v', 'out'):
        specs.update(linear_specs('%s.%s' % (prefix, proj), dim, dim))
    return specs


def ffn_specs(prefix: str, dim: int, hidden: int) -> ParamSpecs:
    specs = norm_specs(prefix + '.norm', dim)
    specs.update(linear_specs(prefix + '.w1', dim, hidden))
    specs.update(linear_specs(prefix + '.w2', hidden, dim))
    return specs


def dense(params: Params, prefix: str, x: Tensor) -> Tensor:
    return linear(x, params[prefix + '.weight'].tensor, params[prefix + '.bias'].tensor)


def norm(params: Params, prefix: str, x: Tensor) -> Tensor:
    return layer_norm(x, params[prefix + '.gain'].tensor, params[prefix + '.offset'].tensor)


def key_padding_mask(lengths: np.ndarray, frames: int) -> np.ndarray:
    """Additive (B, 1, 1, frames) mask, -inf on padded keys."""
    valid = np.arange(frames)[None, :] < np.asarray(lengths)[:, None]
    return np.where(valid, 0.0, -np.inf)[:, None, None, :]


def causal_mask(length: int) -> np.ndarray:
    """Additive (1, 1, L, L) mask, -inf above the diagonal."""
    return np.triu(np.full((length, length), -np.inf), k=1)[None, None]


def multi_head_attention(
        params: Params,
        prefix: str,
        query: Tensor,
        memory: Tensor,
        mask: Optional[np.ndarray],
        heads: int,
) -> Tensor:
    b, tq, dim = query.shape
    tk = memory.shape[1]
    dk = dim // heads
    q = dense(params, prefix + '.q', query).reshape(b, tq, heads, dk).transpose(0, 2, 1, 3)
    k = dense(params, prefix + '.k', memory).reshape(b, tk, heads, dk).transpose(0, 2, 1, 3)
    v = dense(params, prefix + '.v', memory).reshape(b, tk, heads, dk).transpose(0, 2, 1, 3)
    context = scaled_dot_attention(q, k, v, mask)
    return dense(params, prefix + '.out', context.transpose(0, 2, 1, 3).reshape(b, tq, dim))


def feed_forward(
        params: Params,
        prefix: str,
        x: Tensor,
        activation: str,
        rate: float = 0.0,
        rng: Optional[np.random.Generator] = None,
        training: bool = False,
) -> Tensor:
    hidden = dense(params, prefix + '.w1', x)
    hidden = swish(hidden) if activation == 'swish' else hidden.relu()
    hidden = dropout(hidden, rate, rng, training)
    return dense(params, prefix + '.w2', hidden)

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Neural network ops on top of :class:`Tensor`.

    Ops with awkward compositions (convolutions, normalization, softmax,
    attention) are fused: they compute their forward pass with numpy and
    hand-derive the backward pass, which keeps graphs small and gradients
    exact.
"""
import math
from typing import Optional

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .tensor import Tensor, broadcast_shape
from ...exception import VocabError, DimensionError
from ...common.constants import LAYER_NORM_EPS


def linear(x: Tensor, weight: Tensor, bias: Optional[Tensor] = None) -> Tensor:
    """``x @ weight + bias`` with weight stored as (in, out)."""
    out = x @ weight
    return out if bias is None else out + bias


def relu(x: Tensor) -> Tensor:
    return x.relu()


def swish(x: Tensor) -> Tensor:
    return x * x.sigmoid()


def glu(x: Tensor) -> Tensor:
    """Gated linear unit over the last axis."""
    if x.shape[-1] % 2:
        raise DimensionError('glu', (x.shape,), 'last axis must be even')
    half = x.shape[-1] // 2
    return x[..., :half] * x[..., half:].sigmoid()


def conv2d(
        x: Tensor,
        weight: Tensor,
        bias: Optional[Tensor] = None,
        stride_t: int = 1,
        stride_f: int = 1,
) -> Tensor:
    """Valid (unpadded) 2-D convolution.

    ``x`` is (B, C, T, F), ``weight`` is (C', C, K_t, K_f) and the output
    is (B, C', T', F') with ``T' = (T - K_t) // stride_t + 1``.
    """
    if x.ndim != 4 or weight.ndim != 4 or x.shape[1] != weight.shape[1]:
        raise DimensionError('conv2d', (x.shape, weight.shape))
    if stride_t < 1 or stride_f < 1:
        raise DimensionError('conv2d', (x.shape, weight.shape), 'strides must be >= 1')
    kt, kf = weight.shape[2], weight.shape[3]
    if x.shape[2] < kt or x.shape[3] < kf:
        raise DimensionError(
            'conv2d', (x.shape, weight.shape), 'spatial extent smaller than kernel',
        )
    if bias is not None and bias.shape != (weight.shape[0],):
        raise DimensionError('conv2d', (weight.shape, bias.shape), 'bias')
    # (B, C, T', F', K_t, K_f)
    windows = sliding_window_view(x.data, (kt, kf), axis=(2, 3))[:, :, ::stride_t, ::stride_f]
    data = np.tensordot(windows, weight.data, axes=([1, 4, 5], [1, 2, 3])).transpose(0, 3, 1, 2)
    if bias is not None:
        data = data + bias.data[None, :, None, None]
    parents = (x, weight) if bias is None else (x, weight, bias)
    out = Tensor.result(np.ascontiguousarray(data), parents, 'conv2d')
    t_out, f_out = data.shape[2], data.shape[3]

    def _backward() -> None:
        assert out.grad is not None
        grad = out.grad
        if weight.requires_grad:
            weight.accumulate(np.tensordot(grad, windows, axes=([0, 2, 3], [0, 2, 3])))
        if bias is not None and bias.requires_grad:
            bias.accumulate(grad.sum(axis=(0, 2, 3)))
        if x.requires_grad:
            gx = np.zeros_like(x.data)
            t_span = stride_t * (t_out - 1) + 1
            f_span = stride_f * (f_out - 1) + 1
            for i in range(kt):
                for j in range(kf):
                    # (B, T', F', C) -> (B, C, T', F')
                    contrib = np.tensordot(grad, weight.data[:, :, i, j], axes=([1], [0]))
                    gx[:, :, i:i + t_span:stride_t, j:j + f_span:stride_f] += \
                        contrib.transpose(0, 3, 1, 2)
            x.accumulate(gx)
    out._backward = _backward
    return out


def depthwise_conv1d(x: Tensor, weight: Tensor, bias: Optional[Tensor] = None) -> Tensor:
    """Per-channel convolution over time with same padding.

    ``x`` is (B, T, D), ``weight`` is (D, K) with K odd.
    """
    if x.ndim != 3 or weight.ndim != 2 or weight.shape[0] != x.shape[2] or weight.shape[1] % 2 == 0:
        raise DimensionError('depthwise_conv1d', (x.shape, weight.shape))
    k = weight.shape[1]
    pad = (k - 1) // 2
    t = x.shape[1]
    padded = np.pad(x.data, ((0, 0), (pad, pad), (0, 0)))
    # (B, T, D, K)
    windows = sliding_window_view(padded, k, axis=1)
    data = np.einsum('btdk,dk->btd', windows, weight.data)
    if bias is not None:
        data = data + bias.data
    parents = (x, weight) if bias is None else (x, weight, bias)
    out = Tensor.result(data, parents, 'depthwise_conv1d')

    def _backward() -> None:
        assert out.grad is not None
        grad = out.grad
        if weight.requires_grad:
            weight.accumulate(np.einsum('btd,btdk->dk', grad, windows))
        if bias is not None and bias.requires_grad:
            bias.accumulate(grad.sum(axis=(0, 1)))
        if x.requires_grad:
            gpad = np.zeros_like(padded)
            for i in range(k):
                gpad[:, i:i + t, :] += grad * weight.data[:, i]
            x.accumulate(gpad[:, pad:pad + t, :])
    out._backward = _backward
    return out


def layer_norm(
        x: Tensor,
        gain: Tensor,
        offset: Tensor,
        eps: float = LAYER_NORM_EPS,
) -> Tensor:
    """Normalize over the last axis, then scale by ``gain`` and shift by ``offset``."""
    d = x.shape[-1]
    if gain.shape != (d,) or offset.shape != (d,):
        raise DimensionError('layer_norm', (x.shape, gain.shape, offset.shape))
    mu = x.data.mean(axis=-1, keepdims=True)
    centered = x.data - mu
    inv_std = 1.0 / np.sqrt((centered ** 2).mean(axis=-1, keepdims=True) + eps)
    xhat = centered * inv_std
    out = Tensor.result(xhat * gain.data + offset.data, (x, gain, offset), 'layer_norm')

    def _backward() -> None:
        assert out.grad is not None
        grad = out.grad
        lead = tuple(range(grad.ndim - 1))
        if gain.requires_grad:
            gain.accumulate((grad * xhat).sum(axis=lead))
        if offset.requires_grad:
            offset.accumulate(grad.sum(axis=lead))
        if x.requires_grad:
            dxhat = grad * gain.data
            x.accumulate(
                inv_std / d * (
                    d * dxhat
                    - dxhat.sum(axis=-1, keepdims=True)
                    - xhat * (dxhat * xhat).sum(axis=-1, keepdims=True)
                ),
            )
    out._backward = _backward
    return out


def _softmax(data: np.ndarray, axis: int) -> np.ndarray:
    shifted = data - data.max(axis=axis, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=axis, keepdims=True)


def softmax(x: Tensor, axis: int = -1) -> Tensor:
    probs = _softmax(x.data, axis)
    out = Tensor.result(probs, (x,), 'softmax')

    def _backward() -> None:
        assert out.grad is not None
        g = out.grad
        x.accumulate(probs * (g - (g * probs).sum(axis=axis, keepdims=True)))
    out._backward = _backward
    return out


def log_softmax(x: Tensor, axis: int = -1) -> Tensor:
    shifted = x.data - x.data.max(axis=axis, keepdims=True)
    data = shifted - np.log(np.exp(shifted).sum(axis=axis, keepdims=True))
    out = Tensor.result(data, (x,), 'log_softmax')

    def _backward() -> None:
        assert out.grad is not None
        g = out.grad
        x.accumulate(g - np.exp(data) * g.sum(axis=axis, keepdims=True))
    out._backward = _backward
    return out


def embedding(weight: Tensor, ids: np.ndarray) -> Tensor:
    """Rows of ``weight`` (V, D) selected by integer ``ids``."""
    ids = np.asarray(ids, dtype=np.int64)
    vocab = weight.shape[0]
    if ids.size and (ids.min() < 0 or ids.max() >= vocab):
        bad = int(ids.max()) if ids.max() >= vocab else int(ids.min())
        raise VocabError(bad, vocab)
    out = Tensor.result(weight.data[ids], (weight,), 'embedding')

    def _backward() -> None:
        assert out.grad is not None
        grad = np.zeros_like(weight.data)
        np.add.at(grad, ids, out.grad)
        weight.accumulate(grad)
    out._backward = _backward
    return out


def dropout(
        x: Tensor,
        rate: float,
        rng: Optional[np.random.Generator] = None,
        training: bool = True,
) -> Tensor:
    """Inverted dropout, identity at rate 0 or outside training."""
    if rate <= 0.0 or not training or rng is None:
        return x
    keep = (rng.random(x.shape) >= rate).astype(x.dtype) / (1.0 - rate)
    return x * Tensor(keep, dtype=x.dtype)


def scaled_dot_attention(
        q: Tensor,
        k: Tensor,
        v: Tensor,
        mask: Optional[np.ndarray] = None,
) -> Tensor:
    """softmax(q k^T / sqrt(d_k) + mask) v.

    ``mask`` is additive, ``-inf`` entries forbid a key for a query.  Every
    query must keep at least one permitted key.
    """
    if q.shape[-1] != k.shape[-1] or k.shape[-2] != v.shape[-2] or q.shape[:-2] != k.shape[:-2] \
            or k.shape[:-2] != v.shape[:-2]:
        raise DimensionError('scaled_dot_attention', (q.shape, k.shape, v.shape))
    scale = 1.0 / math.sqrt(q.shape[-1])
    scores = np.matmul(q.data, np.swapaxes(k.data, -1, -2)) * scale
    if mask is not None:
        if broadcast_shape('scaled_dot_attention', mask.shape, scores.shape) != scores.shape:
            raise DimensionError('scaled_dot_attention', (scores.shape, mask.shape), 'mask')
        scores = scores + mask
    probs = _softmax(scores, -1)
    out = Tensor.result(np.matmul(probs, v.data), (q, k, v), 'scaled_dot_attention')

    def _backward() -> None:
        assert out.grad is not None
        g = out.grad
        if v.requires_grad:
            v.accumulate(np.matmul(np.swapaxes(probs, -1, -2), g))
        if q.requires_grad or k.requires_grad:
            gp = np.matmul(g, np.swapaxes(v.data, -1, -2))
            gs = probs * (gp - (gp * probs).sum(axis=-1, keepdims=True)) * scale
            if q.requires_grad:
                q.accumulate(np.matmul(gs, k.data))
            if k.requires_grad:
                k.accumulate(np.matmul(np.swapaxes(gs, -1, -2), q.data))
    out._backward = _backward
    return out

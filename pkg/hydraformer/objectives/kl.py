# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Label smoothed attention loss.
"""
from typing import Sequence

import numpy as np

from ..core.tensor import Tensor
from ..exception import DimensionError
from ..common.types import TokenSeq


def smoothed_targets(targets: Sequence[int], vocab_size: int, eps: float) -> np.ndarray:
    """(N, V) rows with 1 - eps on the true token and eps / (V - 1) elsewhere."""
    q = np.full((len(targets), vocab_size), eps / (vocab_size - 1))
    q[np.arange(len(targets)), np.asarray(targets, dtype=np.int64)] = 1.0 - eps
    return q


def _kl_rows(logits: np.ndarray, q: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=-1, keepdims=True)
    log_p = shifted - np.log(np.exp(shifted).sum(axis=-1, keepdims=True))
    safe_q = np.where(q > 0, q, 1.0)
    return (q * (np.log(safe_q) - log_p)).sum(axis=-1)


def batch_kl_loss(logits: Tensor, targets: Sequence[TokenSeq], eps: float) -> Tensor:
    """Mean over utterances of the mean KL(q || softmax(logits)) over each
    utterance's real positions.  Positions past ``len(targets[b])`` are padding.
    """
    if logits.ndim != 3 or logits.shape[0] != len(targets) \
            or any(len(t) > logits.shape[1] for t in targets):
        raise DimensionError('batch_kl_loss', (logits.shape,), '%d targets' % len(targets))
    size, _, vocab = logits.shape
    weights = np.zeros(logits.shape[:2])
    q = np.zeros(logits.shape)
    for b, target in enumerate(targets):
        n = len(target)
        if n == 0:
            continue
        weights[b, :n] = 1.0 / (size * n)
        q[b, :n] = smoothed_targets(target, vocab, eps)
    # padding rows get a harmless uniform target and zero weight
    q[weights == 0] = 1.0 / vocab
    value = float((_kl_rows(logits.data, q) * weights).sum())
    out = Tensor.result(np.asarray(value, dtype=logits.dtype), (logits,), 'kl_attention_loss')

    def _backward() -> None:
        assert out.grad is not None
        shifted = logits.data - logits.data.max(axis=-1, keepdims=True)
        p = np.exp(shifted)
        p /= p.sum(axis=-1, keepdims=True)
        logits.accumulate((p - q) * weights[..., None] * out.grad)
    out._backward = _backward
    return out


def kl_attention_loss(logits: Tensor, target_with_eos: TokenSeq, eps: float) -> Tensor:
    """Mean over positions of KL(q || p) for one (U + 1, V) logit sequence."""
    if logits.ndim != 2:
        raise DimensionError('kl_attention_loss', (logits.shape,), 'expected (U + 1, V)')
    return batch_kl_loss(logits.reshape(1, *logits.shape), [target_with_eos], eps)

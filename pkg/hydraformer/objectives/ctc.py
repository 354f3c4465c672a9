# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Connectionist temporal classification loss.

    The forward (alpha) and backward (beta) recursions run in log space over
    the blank interleaved target lattice.  The gradient with respect to the
    per frame log probabilities is minus the expected label occupancy, so
    the loss is a single fused graph node.
"""
from typing import List, Tuple, Sequence

import numpy as np

from ..core.tensor import Tensor
from ..exception import DimensionError, InfeasibleTargetError
from ..common.types import TokenSeq
from ..common.constants import BLANK_ID


def min_ctc_frames(target: Sequence[int]) -> int:
    """Frames needed by the shortest alignment: one per label plus a blank
    between each pair of equal neighbours.

    >>> min_ctc_frames([1, 1, 2])
    4
    """
    repeats = sum(1 for a, b in zip(target, target[1:]) if a == b)
    return len(target) + repeats


def _expand(target: Sequence[int], blank: int) -> np.ndarray:
    ext = np.full(2 * len(target) + 1, blank, dtype=np.int64)
    ext[1::2] = np.asarray(target, dtype=np.int64)
    return ext


def ctc_alpha_beta(
        log_probs: np.ndarray,
        target: Sequence[int],
        blank: int = BLANK_ID,
) -> Tuple[float, np.ndarray]:
    """Negative log likelihood and its gradient w.r.t. ``log_probs`` (T, V)."""
    frames = log_probs.shape[0]
    required = min_ctc_frames(target)
    if frames < max(1, required):
        raise InfeasibleTargetError(frames, len(target), max(1, required))
    ext = _expand(target, blank)
    states = ext.size
    # s -> s + 2 transitions skip a blank between distinct labels
    skip = np.zeros(states, dtype=bool)
    skip[2:] = (ext[2:] != blank) & (ext[2:] != ext[:-2])
    emit = log_probs[:, ext]

    alpha = np.full((frames, states), -np.inf)
    alpha[0, 0] = emit[0, 0]
    if states > 1:
        alpha[0, 1] = emit[0, 1]
    for t in range(1, frames):
        prev = alpha[t - 1]
        a = prev.copy()
        a[1:] = np.logaddexp(a[1:], prev[:-1])
        a[2:] = np.where(skip[2:], np.logaddexp(a[2:], prev[:-2]), a[2:])
        alpha[t] = a + emit[t]

    beta = np.full((frames, states), -np.inf)
    beta[-1, -1] = emit[-1, -1]
    if states > 1:
        beta[-1, -2] = emit[-1, -2]
    for t in range(frames - 2, -1, -1):
        nxt = beta[t + 1]
        b = nxt.copy()
        b[:-1] = np.logaddexp(b[:-1], nxt[1:])
        b[:-2] = np.where(skip[2:], np.logaddexp(b[:-2], nxt[2:]), b[:-2])
        beta[t] = b + emit[t]

    log_likelihood = float(np.logaddexp(alpha[-1, -1], alpha[-1, -2]) if states > 1 else alpha[-1, -1])
    occupancy = np.exp(alpha + beta - emit - log_likelihood)
    grad = np.zeros_like(log_probs)
    np.add.at(grad, (np.arange(frames)[:, None], ext[None, :]), occupancy)
    return -log_likelihood, -grad


def ctc_loss(log_probs: Tensor, target: TokenSeq, blank: int = BLANK_ID) -> Tensor:
    """-log of the summed probability of every alignment of target, scalar."""
    if log_probs.ndim != 2:
        raise DimensionError('ctc_loss', (log_probs.shape,), 'expected (T, V)')
    loss, grad = ctc_alpha_beta(log_probs.data, target, blank)
    out = Tensor.result(np.asarray(loss, dtype=log_probs.dtype), (log_probs,), 'ctc_loss')

    def _backward() -> None:
        assert out.grad is not None
        log_probs.accumulate(grad * out.grad)
    out._backward = _backward
    return out


def batch_ctc_loss(
        log_probs: Tensor,
        lengths: Sequence[int],
        targets: Sequence[TokenSeq],
        blank: int = BLANK_ID,
) -> Tensor:
    """Mean of per-utterance CTC losses over a padded (B, T, V) batch."""
    if log_probs.ndim != 3 or log_probs.shape[0] != len(targets) or len(lengths) != len(targets):
        raise DimensionError('batch_ctc_loss', (log_probs.shape,), '%d targets' % len(targets))
    size = len(targets)
    grad = np.zeros_like(log_probs.data)
    losses: List[float] = []
    for b in range(size):
        loss, g = ctc_alpha_beta(log_probs.data[b, :lengths[b]], targets[b], blank)
        losses.append(loss)
        grad[b, :lengths[b]] = g / size
    out = Tensor.result(
        np.asarray(sum(losses) / size, dtype=log_probs.dtype), (log_probs,), 'batch_ctc_loss',
    )

    def _backward() -> None:
        assert out.grad is not None
        log_probs.accumulate(grad * out.grad)
    out._backward = _backward
    return out

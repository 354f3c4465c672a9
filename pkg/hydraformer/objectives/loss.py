# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from typing import Any, Optional, Sequence, NamedTuple

from .kl import batch_kl_loss
from .ctc import batch_ctc_loss
from ..core.tensor import Tensor
from ..exception import ConfigError
from ..common.types import TokenSeq
from ..common.constants import (
    DEFAULT_CTC_WEIGHT, DEFAULT_REVERSE_WEIGHT, DEFAULT_LABEL_SMOOTHING,
)


class LossWeights(NamedTuple):
    """alpha weighs CTC against attention, beta weighs r2l against l2r."""
    ctc_weight: float = DEFAULT_CTC_WEIGHT
    reverse_weight: float = DEFAULT_REVERSE_WEIGHT
    label_smoothing: float = DEFAULT_LABEL_SMOOTHING

    def validate(self) -> 'LossWeights':
        if not 0.0 <= self.ctc_weight <= 1.0:
            raise ConfigError('must be in [0, 1]', key='loss.ctc_weight')
        if not 0.0 <= self.reverse_weight <= 1.0:
            raise ConfigError('must be in [0, 1]', key='loss.reverse_weight')
        if not 0.0 <= self.label_smoothing < 1.0:
            raise ConfigError('must be in [0, 1)', key='loss.label_smoothing')
        return self


class LossTerms(NamedTuple):
    total: Tensor
    ctc: float
    kl_l2r: float
    kl_r2l: Optional[float]


def combine_losses(ctc: Any, kl_l2r: Any, kl_r2l: Any, weights: LossWeights) -> Any:
    """alpha * ctc + (1 - alpha) * ((1 - beta) * l2r + beta * r2l).

    Works on floats and tensors alike.  Terms whose weight is zero are left
    out entirely, so they neither contribute nor receive gradients.
    """
    alpha, beta = weights.ctc_weight, weights.reverse_weight
    if kl_r2l is None:
        beta = 0.0
    if beta == 0.0:
        attention = kl_l2r
    elif beta == 1.0:
        attention = kl_r2l
    else:
        attention = (1.0 - beta) * kl_l2r + beta * kl_r2l
    if alpha == 1.0:
        return ctc
    if alpha == 0.0:
        return attention
    return alpha * ctc + (1.0 - alpha) * attention


def attention_weighted(kl_l2r: float, kl_r2l: Optional[float], weights: LossWeights) -> float:
    if kl_r2l is None:
        return kl_l2r
    beta = weights.reverse_weight
    return (1.0 - beta) * kl_l2r + beta * kl_r2l


def total_loss(
        log_probs: Tensor,
        lengths: Sequence[int],
        l2r_logits: Optional[Tensor],
        r2l_logits: Optional[Tensor],
        targets: Sequence[TokenSeq],
        eos: int,
        weights: LossWeights,
) -> LossTerms:
    """Joint CTC and bidirectional attention loss of one branch's batch.

    ``log_probs`` is the CTC head output over the encoder output of the
    selected branch, the logits come from the decoder stacks on the same
    encoder output.  ``l2r_logits`` may be None only when alpha is 1.
    """
    ctc = batch_ctc_loss(log_probs, lengths, targets)
    if l2r_logits is None:
        if weights.ctc_weight != 1.0:
            raise ConfigError('attention logits are required when ctc_weight < 1', key='loss.ctc_weight')
        return LossTerms(ctc, ctc.item(), float('nan'), None)
    eps = weights.label_smoothing
    kl_l2r = batch_kl_loss(l2r_logits, [list(t) + [eos] for t in targets], eps)
    kl_r2l = None
    if r2l_logits is not None:
        kl_r2l = batch_kl_loss(r2l_logits, [list(reversed(t)) + [eos] for t in targets], eps)
    total = combine_losses(ctc, kl_l2r, kl_r2l, weights)
    return LossTerms(total, ctc.item(), kl_l2r.item(), None if kl_r2l is None else kl_r2l.item())

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    A single branch-selective training step and held-out evaluation.
"""
import math
import time
import logging
from typing import Any, Dict, List, Tuple, Optional, Sequence, NamedTuple

import numpy as np

from .optimizer import LazyAdam
from ..model import L2R, R2L, ModelState, decode_step
from ..frontend import FeatureBatch, subsampled_length
from ..harness import Utterance
from ..exception import TooShortError, NonFiniteError, NonFiniteLossError
from ..objectives import LossTerms, LossWeights, total_loss, min_ctc_frames, attention_weighted
from ..core.tensor import Tensor
from ..common.utils import batched


logger = logging.getLogger(__name__)


class StepRecord(NamedTuple):
    step: int
    branch: int
    loss_total: float
    loss_ctc: float
    # None when the decoder takes no part in the loss
    loss_kl: Optional[float]
    grad_norm: float
    lr: float
    dropped: int
    wall_ms: float

    def to_json(self) -> Dict[str, Any]:
        return self._asdict()


def usable(model: ModelState, factor: int, utterances: Sequence[Utterance]) -> Tuple[List[Utterance], int]:
    """Utterances that branch ``factor`` can align with their transcript, and the dropped count."""
    spec = model.frontend.branch(factor)
    kept: List[Utterance] = []
    for utt in utterances:
        try:
            frames = subsampled_length(utt.frames, spec)
        except TooShortError:
            continue
        if frames >= max(1, min_ctc_frames(utt.tokens)):
            kept.append(utt)
    return kept, len(utterances) - len(kept)


def forward_loss(
        model: ModelState,
        factor: int,
        utterances: Sequence[Utterance],
        weights: LossWeights,
        training: bool = False,
        rng: Optional[np.random.Generator] = None,
) -> LossTerms:
    """Branch ``factor`` -> encoder -> CTC head and decoder stacks -> joint loss."""
    batch = FeatureBatch.from_arrays([u.features for u in utterances])
    targets = [list(u.tokens) for u in utterances]
    encoded, lengths = model.encode_branch(batch, factor, training, rng)
    log_probs = model.ctc_log_probs(encoded)
    l2r = r2l = None
    if weights.ctc_weight < 1.0:
        l2r = decode_step(model.parameters, model.decoder, encoded, lengths, targets, L2R, training, rng)
        if model.decoder.has_r2l and weights.reverse_weight > 0.0:
            r2l = decode_step(model.parameters, model.decoder, encoded, lengths, targets, R2L, training, rng)
    return total_loss(log_probs, lengths, l2r, r2l, targets, model.decoder.eos, weights)


def train_step(
        model: ModelState,
        utterances: Sequence[Utterance],
        factor: int,
        weights: LossWeights,
        optimizer: LazyAdam,
        lr: float,
        step: int = 1,
        rng: Optional[np.random.Generator] = None,
) -> StepRecord:
    """Forward and backward through branch ``factor`` only, then one lazy Adam update.

    Raises :exc:`NonFiniteLossError` before touching any parameter when
    the loss or its gradient is not finite, and :exc:`TooShortError` when
    no utterance of the batch fits the branch.
    """
    started = time.perf_counter()
    kept, dropped = usable(model, factor, utterances)
    if dropped:
        logger.warning('Dropped %d of %d utterances unusable by branch %d', dropped, len(utterances), factor)
    if not kept:
        raise TooShortError(max(u.frames for u in utterances), factor)
    model.zero_grad()
    try:
        with np.errstate(over='ignore', invalid='ignore', divide='ignore'):
            terms = forward_loss(model, factor, kept, weights, True, rng)
            if not math.isfinite(terms.total.item()):
                raise NonFiniteLossError(step, factor)
            terms.total.backward()
    except NonFiniteError as e:
        model.zero_grad()
        raise NonFiniteLossError(step, factor) from e
    touched = [p for p in model if p.grad is not None]
    if not all(np.all(np.isfinite(p.grad)) for p in touched):
        model.zero_grad()
        raise NonFiniteLossError(step, factor)
    grad_norm, _ = optimizer.step(touched, lr)
    model.zero_grad()
    kl = None if math.isnan(terms.kl_l2r) else attention_weighted(terms.kl_l2r, terms.kl_r2l, weights)
    return StepRecord(
        step=step,
        branch=factor,
        loss_total=terms.total.item(),
        loss_ctc=terms.ctc,
        loss_kl=kl,
        grad_norm=grad_norm,
        lr=lr,
        dropped=dropped,
        wall_ms=(time.perf_counter() - started) * 1000.0,
    )


def evaluate(
        model: ModelState,
        utterances: Sequence[Utterance],
        weights: LossWeights,
        branches: Sequence[int],
        batch_size: int,
) -> float:
    """Mean joint loss over ``branches``, each averaged over its usable utterances."""
    losses: List[float] = []
    with Tensor.no_grad():
        for factor in branches:
            kept, _ = usable(model, factor, utterances)
            total, count = 0.0, 0
            for chunk in batched(kept, batch_size):
                total += forward_loss(model, factor, chunk, weights).total.item() * len(chunk)
                count += len(chunk)
            if count:
                losses.append(total / count)
    return float(np.mean(losses)) if losses else float('inf')

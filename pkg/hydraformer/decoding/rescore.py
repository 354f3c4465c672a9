# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Attention rescoring of a CTC n-best list with both decoder directions.
"""
import logging
from typing import List, Tuple, Optional, Sequence

import numpy as np

from .prefix_beam import NBestList, NBestEntry
from ..model import L2R, R2L, ModelState, decode_step, decoder_targets
from ..core.tensor import Tensor, log_softmax
from ..exception import UsageError
from ..common.types import TokenSeq
from ..objectives import LossWeights


logger = logging.getLogger(__name__)


def combine_scores(
        attention: Sequence[float],
        ctc: Sequence[float],
        ctc_weight: float,
) -> List[float]:
    """
    >>> combine_scores([-1.0, -2.0], [-5.0, -1.0], 0.5)
    [-3.5, -2.5]
    """
    return [a + ctc_weight * c for a, c in zip(attention, ctc)]


def rank_key(entry: NBestEntry) -> Tuple[float, float, Tuple[int, ...]]:
    """Higher rescored first, then higher ctc score, then lower token ids."""
    return (-entry.score, -entry.ctc_score, entry.tokens)


def teacher_forced_scores(
        model: ModelState,
        memory: Tensor,
        length: int,
        candidates: Sequence[TokenSeq],
        direction: str,
) -> np.ndarray:
    """Summed log probability of each candidate and its closing eos."""
    n = len(candidates)
    batch_memory = Tensor(np.repeat(memory.data, n, axis=0), dtype=memory.dtype)
    logits = decode_step(
        model.parameters, model.decoder, batch_memory, [length] * n, candidates, direction,
    )
    log_p = log_softmax(logits).data
    scores = np.zeros(n)
    for i, target in enumerate(decoder_targets(model.decoder, candidates, direction)):
        scores[i] = log_p[i, np.arange(len(target)), target].sum()
    return scores


def rescore_nbest(
        model: ModelState,
        nbest: NBestList,
        memory: Tensor,
        length: int,
        weights: LossWeights,
        ctc_weight: float,
        length_normalize: bool = False,
) -> NBestList:
    """Fill ``rescored`` on every entry and sort by it.

    att = (1 - beta) * log P_l2r + beta * log P_r2l, final = att + ctc_weight * ctc.
    """
    if len(nbest) == 0:
        raise UsageError('cannot rescore an empty n-best list')
    candidates = [list(e.tokens) for e in nbest]
    with Tensor.no_grad():
        att = teacher_forced_scores(model, memory, length, candidates, L2R)
        if model.decoder.has_r2l and weights.reverse_weight > 0.0:
            r2l = teacher_forced_scores(model, memory, length, candidates, R2L)
            beta = weights.reverse_weight
            att = (1.0 - beta) * att + beta * r2l
    if length_normalize:
        att = att / np.asarray([len(c) + 1 for c in candidates], dtype=np.float64)
    finals = combine_scores(att.tolist(), [e.ctc_score for e in nbest], ctc_weight)
    entries = [e._replace(rescored=f) for e, f in zip(nbest, finals)]
    return NBestList(sorted(entries, key=rank_key))


def attention_rescore(
        model: ModelState,
        nbest: NBestList,
        memory: Tensor,
        length: int,
        weights: LossWeights,
        ctc_weight: float,
        length_normalize: bool = False,
) -> TokenSeq:
    """Best candidate after rescoring, a single candidate is returned as is."""
    if len(nbest) == 1:
        return nbest.best()
    return select_best(rescore_nbest(model, nbest, memory, length, weights, ctc_weight, length_normalize).entries)


def select_best(entries: Sequence[NBestEntry], finals: Optional[Sequence[float]] = None) -> TokenSeq:
    """Winner among entries under the rescoring tie rules."""
    if finals is not None:
        entries = [e._replace(rescored=f) for e, f in zip(entries, finals)]
    return list(min(entries, key=rank_key).tokens)

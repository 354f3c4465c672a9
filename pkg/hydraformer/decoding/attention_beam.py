# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from typing import List, Tuple

import numpy as np

from ..model import L2R, ModelState, decode_step
from ..core.tensor import Tensor, log_softmax
from ..exception import UsageError
from ..common.types import TokenSeq


def attention_beam_search(
        model: ModelState,
        memory: Tensor,
        length: int,
        beam: int,
        max_length: int,
) -> TokenSeq:
    """Left-to-right autoregressive beam search over the l2r decoder.

    Hypotheses end when they emit eos or reach ``max_length`` tokens.  The
    best finished hypothesis by total log probability wins, ties go to the
    lower token ids.
    """
    if beam < 1:
        raise UsageError('beam must be >= 1, got %d' % beam)
    cfg = model.decoder
    alive: List[Tuple[TokenSeq, float]] = [([], 0.0)]
    finished: List[Tuple[TokenSeq, float]] = []
    with Tensor.no_grad():
        for _ in range(max_length + 1):
            if not alive:
                break
            n = len(alive)
            logits = decode_step(
                model.parameters, cfg,
                Tensor(np.repeat(memory.data, n, axis=0), dtype=memory.dtype),
                [length] * n,
                [tokens for tokens, _ in alive],
                L2R,
            )
            log_p = log_softmax(logits).data
            expansions: List[Tuple[float, TokenSeq, bool]] = []
            for i, (tokens, score) in enumerate(alive):
                row = log_p[i, len(tokens)]
                at_limit = len(tokens) >= max_length
                for token in range(cfg.vocab_size):
                    if token in (cfg.blank, cfg.sos):
                        continue
                    if at_limit and token != cfg.eos:
                        continue
                    expansions.append((score + float(row[token]), tokens + [token], token == cfg.eos))
            expansions.sort(key=lambda e: (-e[0], e[1]))
            alive = []
            for score, tokens, done in expansions[:beam]:
                if done:
                    finished.append((tokens[:-1], score))
                else:
                    alive.append((tokens, score))
    if not finished:
        return []
    return min(finished, key=lambda h: (-h[1], h[0]))[0]

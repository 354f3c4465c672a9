# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from typing import Sequence

import editdistance

from ..common.types import TokenSeq


def token_errors(reference: TokenSeq, hypothesis: TokenSeq) -> int:
    return int(editdistance.eval(list(reference), list(hypothesis)))


def token_accuracy(references: Sequence[TokenSeq], hypotheses: Sequence[TokenSeq]) -> float:
    """1 - total edit distance / total reference tokens, floored at 0."""
    total = sum(len(r) for r in references)
    if total == 0:
        return 1.0 if all(not h for h in hypotheses) else 0.0
    errors = sum(token_errors(r, h) for r, h in zip(references, hypotheses))
    return max(0.0, 1.0 - errors / total)

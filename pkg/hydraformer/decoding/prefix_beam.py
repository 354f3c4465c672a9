# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    CTC prefix beam search.

    Every prefix tracks the log probability of the paths that end in a blank
    (``pb``) and of those that end in its last label (``pnb``).  All labels
    are expanded on every frame, only the prefix set is pruned to the beam.
"""
import math
from typing import Any, Dict, List, Tuple, Iterator, Optional, NamedTuple

import numpy as np

from .greedy import as_array
from ..exception import UsageError
from ..common.types import TokenSeq
from ..common.constants import BLANK_ID


NEG_INF = -math.inf


class NBestEntry(NamedTuple):
    tokens: Tuple[int, ...]
    ctc_score: float
    rescored: Optional[float] = None

    @property
    def score(self) -> float:
        return self.ctc_score if self.rescored is None else self.rescored


class NBestList:
    """Hypotheses sorted by descending active score."""

    def __init__(self, entries: List[NBestEntry]) -> None:
        self.entries = entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[NBestEntry]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> NBestEntry:
        return self.entries[index]

    def best(self) -> TokenSeq:
        if not self.entries:
            raise UsageError('empty n-best list')
        return list(self.entries[0].tokens)

    def is_sorted(self) -> bool:
        scores = [e.score for e in self.entries]
        return all(a >= b for a, b in zip(scores, scores[1:]))


def _logsumexp(*values: float) -> float:
    return float(np.logaddexp.reduce(values))


def ctc_prefix_beam(log_probs: Any, beam: int, blank: int = BLANK_ID) -> NBestList:
    """Top ``beam`` label sequences by total CTC probability."""
    if beam < 1:
        raise UsageError('beam must be >= 1, got %d' % beam)
    lp = as_array(log_probs)
    frames, vocab = lp.shape
    beams: List[Tuple[Tuple[int, ...], Tuple[float, float]]] = [((), (0.0, NEG_INF))]
    for t in range(frames):
        nxt: Dict[Tuple[int, ...], Tuple[float, float]] = {}

        def add(prefix: Tuple[int, ...], pb: float, pnb: float) -> None:
            old_b, old_nb = nxt.get(prefix, (NEG_INF, NEG_INF))
            nxt[prefix] = (_logsumexp(old_b, pb), _logsumexp(old_nb, pnb))

        row = lp[t]
        for prefix, (pb, pnb) in beams:
            last = prefix[-1] if prefix else None
            for s in range(vocab):
                p = float(row[s])
                if s == blank:
                    add(prefix, _logsumexp(pb, pnb) + p, NEG_INF)
                elif s == last:
                    # repeated label collapses unless a blank separates it
                    add(prefix, NEG_INF, pnb + p)
                    add(prefix + (s,), NEG_INF, pb + p)
                else:
                    add(prefix + (s,), NEG_INF, _logsumexp(pb, pnb) + p)
        ranked = sorted(nxt.items(), key=lambda kv: (-_logsumexp(*kv[1]), kv[0]))
        beams = ranked[:beam]
    return NBestList([
        NBestEntry(prefix, _logsumexp(pb, pnb))
        for prefix, (pb, pnb) in beams
        if _logsumexp(pb, pnb) > NEG_INF
    ])

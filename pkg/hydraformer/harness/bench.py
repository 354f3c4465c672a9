# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Real-time factor benchmark of frontend, encoder and CTC greedy search.
"""
import time
import logging
import statistics
from typing import Any, Dict, List, Tuple, Sequence, NamedTuple

import numpy as np

from .dataset import Utterance
from ..model import ModelState
from ..frontend import FeatureBatch, min_frames
from ..decoding import ctc_greedy
from ..exception import BenchError, UsageError
from ..core.tensor import Tensor
from ..common.types import TokenSeq
from ..common.utils import versioned, single_threaded
from ..common.constants import (
    BENCH_MODES, DEFAULT_CHUNK_FRAMES, DEFAULT_BENCH_REPETITIONS,
    DEFAULT_FRAME_SHIFT_SECONDS,
)


logger = logging.getLogger(__name__)


class RtfReport(NamedTuple):
    branch: int
    mode: str
    utterances: int
    audio_seconds: float
    wall_seconds: float
    rtf: float
    threads: int
    skipped: int = 0

    @property
    def comparable(self) -> bool:
        return self.threads == 1

    def to_json(self) -> Dict[str, Any]:
        record = self._asdict()
        record['comparable'] = self.comparable
        return versioned(record)


def chunk_bounds(frames: int, chunk_frames: int, shortest: int) -> List[Tuple[int, int]]:
    """Windows of ``chunk_frames``; a tail shorter than ``shortest`` joins the previous window.

    >>> chunk_bounds(150, 64, 15)
    [(0, 64), (64, 128), (128, 150)]
    >>> chunk_bounds(140, 64, 15)
    [(0, 64), (64, 140)]
    """
    bounds: List[Tuple[int, int]] = []
    for start in range(0, frames, chunk_frames):
        end = min(frames, start + chunk_frames)
        if bounds and end - start < shortest:
            bounds[-1] = (bounds[-1][0], end)
        else:
            bounds.append((start, end))
    return bounds


def _greedy(model: ModelState, factor: int, features: np.ndarray) -> TokenSeq:
    encoded, lengths = model.encode_branch(FeatureBatch.from_arrays([features]), factor)
    return ctc_greedy(model.ctc_log_probs(encoded).data[0, :lengths[0]])


def run_once(
        model: ModelState,
        factor: int,
        utterances: Sequence[Utterance],
        mode: str,
        chunk_frames: int = DEFAULT_CHUNK_FRAMES,
) -> List[TokenSeq]:
    """One timed pass; chunked mode decodes every window independently."""
    shortest = min_frames(model.frontend.branch(factor))
    out: List[TokenSeq] = []
    with Tensor.no_grad():
        for utt in utterances:
            if mode == 'full':
                out.append(_greedy(model, factor, utt.features))
                continue
            tokens: TokenSeq = []
            for start, end in chunk_bounds(utt.frames, chunk_frames, shortest):
                tokens.extend(_greedy(model, factor, utt.features[start:end]))
            out.append(tokens)
    return out


def bench_rtf(
        model: ModelState,
        factor: int,
        utterances: Sequence[Utterance],
        mode: str = 'full',
        repetitions: int = DEFAULT_BENCH_REPETITIONS,
        chunk_frames: int = DEFAULT_CHUNK_FRAMES,
        threads: int = 1,
) -> RtfReport:
    """Median wall time over ``repetitions`` passes divided by audio duration.

    A warmup pass runs first and is not timed.  Utterances too short for
    the branch are left out of both the timing and the audio duration and
    counted in ``skipped``.
    """
    if mode not in BENCH_MODES:
        raise UsageError('unknown bench mode %s, expected one of %s' % (mode, ', '.join(BENCH_MODES)))
    if not utterances:
        raise BenchError('no utterances to benchmark')
    if repetitions < 1:
        raise UsageError('repetitions must be >= 1')
    shortest = min_frames(model.frontend.branch(factor))
    kept = [u for u in utterances if u.frames >= shortest]
    skipped = len(utterances) - len(kept)
    if skipped:
        logger.warning(
            'Skipping %d of %d utterances shorter than %d frames for branch %d',
            skipped, len(utterances), shortest, factor,
        )
    if not kept:
        raise BenchError('every utterance is shorter than %d frames for branch %d' % (shortest, factor))
    audio_seconds = sum(u.frames for u in kept) * DEFAULT_FRAME_SHIFT_SECONDS
    walls: List[float] = []
    with single_threaded(threads):
        run_once(model, factor, kept, mode, chunk_frames)
        for _ in range(repetitions):
            start = time.perf_counter()
            run_once(model, factor, kept, mode, chunk_frames)
            walls.append(time.perf_counter() - start)
    wall = statistics.median(walls)
    report = RtfReport(factor, mode, len(kept), audio_seconds, wall, wall / audio_seconds, threads, skipped)
    logger.info('branch %d %s: rtf %.6f over %d utterances', factor, mode, report.rtf, len(kept))
    return report

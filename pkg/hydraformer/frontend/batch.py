# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from typing import List, Tuple, Sequence, NamedTuple

import numpy as np

from ..exception import DimensionError


class FeatureBatch(NamedTuple):
    """Zero padded (B, T, I) frames and the true frame count of each row."""
    features: np.ndarray
    lengths: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.lengths)

    @classmethod
    def from_arrays(cls, arrays: Sequence[np.ndarray]) -> 'FeatureBatch':
        if not arrays:
            raise DimensionError('FeatureBatch', (), 'empty batch')
        widths = {a.shape[1] for a in arrays}
        if len(widths) != 1 or any(a.ndim != 2 or a.shape[0] < 1 for a in arrays):
            raise DimensionError('FeatureBatch', tuple(a.shape for a in arrays))
        frames = max(a.shape[0] for a in arrays)
        features = np.zeros((len(arrays), frames, widths.pop()), dtype=np.float64)
        for b, a in enumerate(arrays):
            features[b, :a.shape[0]] = a
        return cls(features, tuple(int(a.shape[0]) for a in arrays))

    def select(self, rows: Sequence[int]) -> 'FeatureBatch':
        """Sub-batch of the given rows, trimmed to its own longest row."""
        return FeatureBatch.from_arrays([self.features[b, :self.lengths[b]] for b in rows])


def length_mask(lengths: Sequence[int], frames: int) -> np.ndarray:
    """(B, frames) boolean mask, True on real frames."""
    return np.arange(frames)[None, :] < np.asarray(lengths)[:, None]


def pad_tokens(seqs: Sequence[Sequence[int]], fill: int) -> Tuple[np.ndarray, List[int]]:
    width = max((len(s) for s in seqs), default=0)
    out = np.full((len(seqs), width), fill, dtype=np.int64)
    for b, s in enumerate(seqs):
        out[b, :len(s)] = s
    return out, [len(s) for s in seqs]

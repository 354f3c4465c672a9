# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from typing import Any, List, Sequence

import numpy as np

from ..common.types import TokenSeq
from ..common.constants import BLANK_ID


def as_array(log_probs: Any) -> np.ndarray:
    return np.asarray(getattr(log_probs, 'data', log_probs))


def collapse(frames: Sequence[int], blank: int = BLANK_ID) -> TokenSeq:
    """Merge runs of equal labels, then drop blanks.

    >>> collapse([0, 1, 1, 0, 2])
    [1, 2]
    >>> collapse([1, 0, 1])
    [1, 1]
    """
    out: List[int] = []
    previous = None
    for label in frames:
        if label != previous and label != blank:
            out.append(int(label))
        previous = label
    return out


def ctc_greedy(log_probs: Any, blank: int = BLANK_ID) -> TokenSeq:
    """Best path decoding of (T', V) log probabilities, ties go to the lower id."""
    return collapse(np.argmax(as_array(log_probs), axis=-1).tolist(), blank)

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import math
import functools

import numpy as np

from ..core.tensor import Tensor
from ..common.constants import POS_ENC_BASE


@functools.lru_cache(maxsize=64)
def sinusoid_table(length: int, dim: int) -> np.ndarray:
    """PE[t, 2k] = sin(t / base^(2k/dim)), PE[t, 2k+1] = cos(same angle)."""
    position = np.arange(length, dtype=np.float64)[:, None]
    div = np.exp(np.arange(0, dim, 2, dtype=np.float64) * -(math.log(POS_ENC_BASE) / dim))
    table = np.zeros((length, dim), dtype=np.float64)
    table[:, 0::2] = np.sin(position * div)
    table[:, 1::2] = np.cos(position * div)[:, :dim // 2]
    table.setflags(write=False)
    return table


def pos_enc(z: Tensor, enabled: bool = True) -> Tensor:
    """Scale (B, T, D) input by sqrt(D) and add the sinusoid table."""
    if not enabled:
        return z
    dim = z.shape[-1]
    table = sinusoid_table(z.shape[-2], dim).astype(z.dtype, copy=False)
    return z * math.sqrt(dim) + Tensor(table, dtype=z.dtype)

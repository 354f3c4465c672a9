# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Per-batch branch selection.
"""
from typing import Sequence

import numpy as np

from ..exception import ConfigError


def select_branch(rng: np.random.Generator, branches: Sequence[int]) -> int:
    """Uniform draw over ``branches``; only ``rng`` advances.

    >>> select_branch(np.random.default_rng(0), [6])
    6
    """
    if not branches:
        raise ConfigError('no branch to select from', key='train.branches')
    return int(branches[int(rng.integers(len(branches)))])

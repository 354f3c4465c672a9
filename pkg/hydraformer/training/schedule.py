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


def noam_lr(step: int, peak_lr: float, warmup_steps: int) -> float:
    """Linear warmup to ``peak_lr`` at ``warmup_steps``, then inverse square root decay.

    >>> round(noam_lr(100, 1e-3, 100), 12)
    0.001
    >>> round(noam_lr(400, 1e-3, 100), 12)
    0.0005
    """
    step = max(1, step)
    return peak_lr * math.sqrt(warmup_steps) * min(step ** -0.5, step * warmup_steps ** -1.5)

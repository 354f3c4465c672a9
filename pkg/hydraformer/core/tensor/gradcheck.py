# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import logging
from typing import Callable, Optional, Sequence

import numpy as np

from .tensor import Tensor
from ...exception import UsageError
from ...common.constants import GRAD_CHECK_STEP


logger = logging.getLogger(__name__)


def grad_check(
        f: Callable[[], Tensor],
        params: Sequence[Tensor],
        h: float = GRAD_CHECK_STEP,
        max_coords: Optional[int] = None,
        seed: int = 0,
) -> float:
    """Compare analytic gradients of scalar ``f()`` against central differences.

    Returns the max over checked coordinates of
    ``|analytic - numeric| / max(1, |analytic|)``.  With ``max_coords`` set,
    at most that many coordinates per parameter are sampled.
    """
    for p in params:
        p.zero_grad()
    out = f()
    if out.data.size != 1:
        raise UsageError('grad_check needs a scalar output, got shape %s' % (out.shape,))
    out.backward()
    analytic = [
        p.grad.copy() if p.grad is not None else np.zeros_like(p.data)
        for p in params
    ]
    rng = np.random.default_rng(seed)
    worst = 0.0
    with Tensor.no_grad():
        for p, grad in zip(params, analytic):
            flat = p.data.reshape(-1)
            flat_grad = grad.reshape(-1)
            coords = np.arange(flat.size)
            if max_coords is not None and flat.size > max_coords:
                coords = np.sort(rng.choice(flat.size, size=max_coords, replace=False))
            for i in coords:
                original = flat[i]
                flat[i] = original + h
                plus = f().item()
                flat[i] = original - h
                minus = f().item()
                flat[i] = original
                numeric = (plus - minus) / (2.0 * h)
                err = abs(flat_grad[i] - numeric) / max(1.0, abs(flat_grad[i]))
                worst = max(worst, float(err))
    logger.debug('grad_check over %d tensors: max rel error %.3e', len(params), worst)
    return worst

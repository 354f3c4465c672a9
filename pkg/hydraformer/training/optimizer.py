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
import logging
from typing import Dict, List, Tuple, Iterable

import numpy as np

from ..core.tensor import Parameter
from ..common.constants import ADAM_EPS, ADAM_BETA1, ADAM_BETA2


logger = logging.getLogger(__name__)


def global_norm(params: Iterable[Parameter]) -> float:
    return math.sqrt(sum(float(np.sum(p.grad * p.grad)) for p in params if p.grad is not None))


class LazyAdam:
    """Adam that only touches parameters holding a gradient.

    A parameter outside the active graph keeps its value, its moments and
    its bias correction clock (``Parameter.step_count``) exactly as they
    were.  Clipping scales by the global norm of the touched gradients.
    """

    def __init__(
            self,
            beta1: float = ADAM_BETA1,
            beta2: float = ADAM_BETA2,
            eps: float = ADAM_EPS,
            grad_clip: float = 0.0,
    ) -> None:
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.grad_clip = grad_clip
        self.moments: Dict[str, Tuple[np.ndarray, np.ndarray]] = {}

    def step(self, params: Iterable[Parameter], lr: float) -> Tuple[float, List[str]]:
        """Apply one update; returns the pre-clip gradient norm and the updated names."""
        touched = [p for p in params if p.grad is not None]
        norm = global_norm(touched)
        scale = 1.0
        if self.grad_clip > 0 and norm > self.grad_clip:
            scale = self.grad_clip / norm
        for p in touched:
            grad = p.grad * scale
            m, v = self.moments.get(p.name) or (np.zeros_like(p.data), np.zeros_like(p.data))
            m = self.beta1 * m + (1.0 - self.beta1) * grad
            v = self.beta2 * v + (1.0 - self.beta2) * grad * grad
            p.step_count += 1
            m_hat = m / (1.0 - self.beta1 ** p.step_count)
            v_hat = v / (1.0 - self.beta2 ** p.step_count)
            p.data[...] -= lr * m_hat / (np.sqrt(v_hat) + self.eps)
            self.moments[p.name] = (m, v)
        return norm, [p.name for p in touched]

    def moment_snapshot(self) -> Dict[str, Tuple[np.ndarray, np.ndarray]]:
        return {name: (m.copy(), v.copy()) for name, (m, v) in self.moments.items()}

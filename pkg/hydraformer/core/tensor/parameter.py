# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from typing import Any, Dict, NamedTuple

import numpy as np

from .tensor import Tensor
from ...common.types import Shape
from ...common.constants import DOT


SHARED = 'shared'


class Parameter:
    """A named trainable tensor.

    ``step_count`` counts optimizer updates applied to this parameter only,
    so parameters outside the active graph keep their own update clock.
    """

    __slots__ = ('name', 'tensor', 'step_count')

    def __init__(self, name: str, data: Any, step_count: int = 0) -> None:
        self.name = name
        self.tensor = data if isinstance(data, Tensor) else Tensor(data)
        self.tensor.requires_grad = True
        self.step_count = step_count

    def __repr__(self) -> str:
        return 'Parameter(%s, shape=%s, steps=%d)' % (self.name, self.shape, self.step_count)

    @property
    def data(self) -> np.ndarray:
        return self.tensor.data

    @property
    def grad(self) -> Any:
        return self.tensor.grad

    @property
    def shape(self) -> Shape:
        return self.tensor.shape

    @property
    def owner(self) -> str:
        """Owning branch (``sub4``, ...) for frontend parameters, else ``shared``."""
        parts = self.name.split(DOT)
        if len(parts) > 1 and parts[0] == 'frontend':
            return parts[1]
        return SHARED


ParameterMap = Dict[str, Parameter]


UNIFORM_FAN_IN = 'uniform_fan_in'
NORMAL = 'normal'
ONES = 'ones'
ZEROS = 'zeros'


class ParamSpec(NamedTuple):
    """Shape and initializer of a parameter, declared by the module that owns it."""
    shape: Shape
    init: str = UNIFORM_FAN_IN
    fan_in: int = 1

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        if self.init == ONES:
            return np.ones(self.shape)
        if self.init == ZEROS:
            return np.zeros(self.shape)
        if self.init == NORMAL:
            return rng.standard_normal(self.shape)
        bound = 1.0 / np.sqrt(max(1, self.fan_in))
        return rng.uniform(-bound, bound, size=self.shape)


ParamSpecs = Dict[str, ParamSpec]

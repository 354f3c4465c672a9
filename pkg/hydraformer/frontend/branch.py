# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Branch topologies and their exact length arithmetic.
"""
from typing import Any, Dict, List, Tuple, NamedTuple

from ..exception import ConfigError, TooShortError
from ..common.constants import (
    DEFAULT_FACTORS, DEFAULT_MODEL_DIM, SUPPORTED_FACTORS, DEFAULT_FEATURE_DIM,
    DEFAULT_USE_POS_ENC,
)


class ConvLayerSpec(NamedTuple):
    kernel_t: int
    kernel_f: int
    stride_t: int
    stride_f: int
    out_channels: int


class BranchSpec(NamedTuple):
    factor: int
    layers: Tuple[ConvLayerSpec, ...]
    model_dim: int
    input_dim: int

    @property
    def prefix(self) -> str:
        return 'frontend.sub%d' % self.factor

    def to_json(self) -> Dict[str, Any]:
        return {
            'factor': self.factor,
            'layers': [list(layer) for layer in self.layers],
            'model_dim': self.model_dim,
            'input_dim': self.input_dim,
        }

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> 'BranchSpec':
        return cls(
            factor=int(obj['factor']),
            layers=tuple(ConvLayerSpec(*(int(v) for v in layer)) for layer in obj['layers']),
            model_dim=int(obj['model_dim']),
            input_dim=int(obj['input_dim']),
        )


# time strides per factor, frequency strides mirror them
_STRIDES: Dict[int, Tuple[int, ...]] = {
    4: (2, 2),
    6: (2, 3),
    8: (2, 2, 2),
}


def build_branch(
        factor: int,
        model_dim: int = DEFAULT_MODEL_DIM,
        input_dim: int = DEFAULT_FEATURE_DIM,
) -> BranchSpec:
    """Conv pipeline of a subsampling branch, kernel ``2 * stride - 1`` per layer.

    >>> [layer.stride_t for layer in build_branch(6).layers]
    [2, 3]
    """
    if factor not in _STRIDES:
        raise ConfigError(
            'unsupported subsampling factor %s, expected one of %s' % (factor, SUPPORTED_FACTORS),
            key='frontend.factors',
        )
    layers = tuple(
        ConvLayerSpec(2 * s - 1, 2 * s - 1, s, s, model_dim)
        for s in _STRIDES[factor]
    )
    spec = BranchSpec(factor, layers, model_dim, input_dim)
    if _fold(input_dim, [(layer.kernel_f, layer.stride_f) for layer in layers]) < 1:
        raise ConfigError(
            'input_dim %d leaves no frequency bins after factor %d' % (input_dim, factor),
            key='frontend.input_dim',
        )
    return spec


def _fold(length: int, kernels_strides: List[Tuple[int, int]]) -> int:
    for kernel, stride in kernels_strides:
        if length < kernel:
            return 0
        length = (length - kernel) // stride + 1
    return length


def subsampled_length(frames: int, spec: BranchSpec) -> int:
    """Exact output frame count of a branch.

    >>> [subsampled_length(100, build_branch(n)) for n in (4, 6, 8)]
    [24, 15, 11]
    """
    out = _fold(frames, [(layer.kernel_t, layer.stride_t) for layer in spec.layers])
    if frames < 1 or out < 1:
        raise TooShortError(frames, spec.factor)
    return out


def min_frames(spec: BranchSpec) -> int:
    """Smallest input length the branch accepts."""
    frames = 1
    for layer in reversed(spec.layers):
        frames = (frames - 1) * layer.stride_t + layer.kernel_t
    return frames


def freq_length(spec: BranchSpec) -> int:
    """Frequency bins left after the conv stack, F_final."""
    return _fold(spec.input_dim, [(layer.kernel_f, layer.stride_f) for layer in spec.layers])


class FrontendConfig(NamedTuple):
    factors: Tuple[int, ...] = tuple(DEFAULT_FACTORS)
    use_pos_enc: bool = DEFAULT_USE_POS_ENC
    input_dim: int = DEFAULT_FEATURE_DIM
    model_dim: int = DEFAULT_MODEL_DIM

    @property
    def branches(self) -> Tuple[BranchSpec, ...]:
        return tuple(build_branch(f, self.model_dim, self.input_dim) for f in self.factors)

    def branch(self, factor: int) -> BranchSpec:
        if factor not in self.factors:
            raise ConfigError(
                'branch %d is not configured, have %s' % (factor, list(self.factors)),
                key='frontend.factors',
            )
        return build_branch(factor, self.model_dim, self.input_dim)

    def validate(self) -> 'FrontendConfig':
        if not self.factors:
            raise ConfigError('at least one branch is required', key='frontend.factors')
        if list(self.factors) != sorted(set(self.factors)):
            raise ConfigError(
                'factors must be unique and ascending, got %s' % list(self.factors),
                key='frontend.factors',
            )
        if self.model_dim < 1 or self.input_dim < 1:
            raise ConfigError('dimensions must be positive', key='frontend.model_dim')
        # raises for unsupported factors and too narrow inputs
        self.branches
        return self

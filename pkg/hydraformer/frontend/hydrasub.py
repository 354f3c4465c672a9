# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    .. spelling::

       hydrasub
"""
from typing import List, Tuple, Mapping

from .batch import FeatureBatch
from .branch import BranchSpec, FrontendConfig, freq_length, subsampled_length
from .posenc import pos_enc
from ..core.tensor import (
    ONES, ZEROS, Tensor, ParamSpec, Parameter, ParamSpecs, conv2d, linear,
    layer_norm,
)


def branch_param_specs(spec: BranchSpec) -> ParamSpecs:
    """Parameters of one branch, all under ``frontend.sub{n}.``."""
    specs: ParamSpecs = {}
    in_channels = 1
    for i, layer in enumerate(spec.layers):
        fan_in = in_channels * layer.kernel_t * layer.kernel_f
        specs['%s.conv%d.weight' % (spec.prefix, i)] = ParamSpec(
            (layer.out_channels, in_channels, layer.kernel_t, layer.kernel_f), fan_in=fan_in,
        )
        specs['%s.conv%d.bias' % (spec.prefix, i)] = ParamSpec((layer.out_channels,), fan_in=fan_in)
        in_channels = layer.out_channels
    flat = in_channels * freq_length(spec)
    specs['%s.out.weight' % spec.prefix] = ParamSpec((flat, spec.model_dim), fan_in=flat)
    specs['%s.out.bias' % spec.prefix] = ParamSpec((spec.model_dim,), fan_in=flat)
    specs['%s.norm.gain' % spec.prefix] = ParamSpec((spec.model_dim,), ONES)
    specs['%s.norm.offset' % spec.prefix] = ParamSpec((spec.model_dim,), ZEROS)
    return specs


def frontend_param_specs(config: FrontendConfig) -> ParamSpecs:
    specs: ParamSpecs = {}
    for spec in config.branches:
        specs.update(branch_param_specs(spec))
    return specs


def frontend_forward(
        params: Mapping[str, Parameter],
        batch: FeatureBatch,
        spec: BranchSpec,
        use_pos_enc: bool,
) -> Tuple[Tensor, List[int]]:
    """Hydra embedding of a batch through one branch.

    unsqueeze -> (conv2d -> relu) per layer -> flatten channels x freq ->
    linear to D -> optional positional encoding -> layer norm.
    Returns (B, T', D) and the subsampled length of every row.
    """
    lengths = [subsampled_length(n, spec) for n in batch.lengths]
    p = spec.prefix
    dtype = params['%s.out.weight' % p].data.dtype
    b, t, i = batch.features.shape
    x = Tensor(batch.features.reshape(b, 1, t, i), dtype=dtype)
    for n, layer in enumerate(spec.layers):
        x = conv2d(
            x,
            params['%s.conv%d.weight' % (p, n)].tensor,
            params['%s.conv%d.bias' % (p, n)].tensor,
            layer.stride_t,
            layer.stride_f,
        ).relu()
    _, c, t_out, f_out = x.shape
    x = x.transpose(0, 2, 1, 3).reshape(b, t_out, c * f_out)
    x = linear(x, params['%s.out.weight' % p].tensor, params['%s.out.bias' % p].tensor)
    x = pos_enc(x, use_pos_enc)
    x = layer_norm(x, params['%s.norm.gain' % p].tensor, params['%s.norm.offset' % p].tensor)
    return x, lengths

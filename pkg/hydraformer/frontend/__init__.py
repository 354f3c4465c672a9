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
from .batch import FeatureBatch, pad_tokens, length_mask
from .branch import (
    BranchSpec, ConvLayerSpec, FrontendConfig, min_frames, build_branch,
    freq_length, subsampled_length,
)
from .posenc import pos_enc, sinusoid_table
from .hydrasub import frontend_forward, branch_param_specs, frontend_param_specs


__all__ = [
    'ConvLayerSpec',
    'BranchSpec',
    'FrontendConfig',
    'FeatureBatch',
    'build_branch',
    'subsampled_length',
    'min_frames',
    'freq_length',
    'pos_enc',
    'sinusoid_table',
    'frontend_forward',
    'branch_param_specs',
    'frontend_param_specs',
    'length_mask',
    'pad_tokens',
]

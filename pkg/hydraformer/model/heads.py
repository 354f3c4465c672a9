# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from .layers import Params, dense, linear_specs
from ..core.tensor import Tensor, ParamSpecs, log_softmax


def ctc_param_specs(model_dim: int, vocab_size: int) -> ParamSpecs:
    return linear_specs('heads.ctc', model_dim, vocab_size)


def ctc_head(params: Params, encoded: Tensor) -> Tensor:
    """(B, T', D) -> (B, T', V) per frame log probabilities."""
    return log_softmax(dense(params, 'heads.ctc', encoded))

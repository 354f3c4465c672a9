# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    .. spelling::

       autograd
"""
from .tensor import Tensor, unbroadcast
from .gradcheck import grad_check
from .parameter import (
    ONES, ZEROS, NORMAL, SHARED, UNIFORM_FAN_IN, ParamSpec, Parameter,
    ParamSpecs, ParameterMap,
)
from .functional import (
    glu, relu, swish, linear, conv2d, dropout, softmax, embedding,
    layer_norm, log_softmax, depthwise_conv1d, scaled_dot_attention,
)


__all__ = [
    'Tensor',
    'Parameter',
    'ParameterMap',
    'SHARED',
    'ParamSpec',
    'ParamSpecs',
    'UNIFORM_FAN_IN',
    'NORMAL',
    'ONES',
    'ZEROS',
    'unbroadcast',
    'grad_check',
    'conv2d',
    'depthwise_conv1d',
    'linear',
    'relu',
    'swish',
    'glu',
    'layer_norm',
    'softmax',
    'log_softmax',
    'embedding',
    'dropout',
    'scaled_dot_attention',
]

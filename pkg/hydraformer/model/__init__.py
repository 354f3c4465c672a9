# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from .state import ModelState, initialize, validate_configs, model_param_specs
from .heads import ctc_head, ctc_param_specs
from .config import L2R, R2L, DIRECTIONS, EncoderConfig, DecoderConfig
from .decoder import (
    decode_step, check_tokens, decoder_inputs, decoder_targets,
    decoder_param_specs,
)
from .encoder import encode, encoder_param_specs


__all__ = [
    'EncoderConfig',
    'DecoderConfig',
    'ModelState',
    'L2R',
    'R2L',
    'DIRECTIONS',
    'initialize',
    'validate_configs',
    'model_param_specs',
    'encode',
    'encoder_param_specs',
    'ctc_head',
    'ctc_param_specs',
    'decode_step',
    'decoder_param_specs',
    'decoder_inputs',
    'decoder_targets',
    'check_tokens',
]

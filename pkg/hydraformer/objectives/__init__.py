# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from .kl import kl_attention_loss, batch_kl_loss, smoothed_targets
from .ctc import ctc_loss, batch_ctc_loss, ctc_alpha_beta, min_ctc_frames
from .loss import (
    LossTerms, LossWeights, total_loss, combine_losses, attention_weighted,
)


__all__ = [
    'LossWeights',
    'LossTerms',
    'ctc_loss',
    'batch_ctc_loss',
    'ctc_alpha_beta',
    'min_ctc_frames',
    'kl_attention_loss',
    'batch_kl_loss',
    'smoothed_targets',
    'total_loss',
    'combine_losses',
    'attention_weighted',
]

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from .decode import decode_features
from .greedy import collapse, ctc_greedy
from .rescore import (
    rank_key, select_best, rescore_nbest, combine_scores, attention_rescore,
    teacher_forced_scores,
)
from .accuracy import token_errors, token_accuracy
from .prefix_beam import NBestList, NBestEntry, ctc_prefix_beam
from .attention_beam import attention_beam_search


__all__ = [
    'NBestEntry',
    'NBestList',
    'collapse',
    'ctc_greedy',
    'ctc_prefix_beam',
    'combine_scores',
    'rank_key',
    'select_best',
    'teacher_forced_scores',
    'rescore_nbest',
    'attention_rescore',
    'attention_beam_search',
    'decode_features',
    'token_errors',
    'token_accuracy',
]

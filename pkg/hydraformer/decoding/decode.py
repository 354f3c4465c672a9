# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import logging
from typing import List, Optional, Sequence

import numpy as np

from .greedy import ctc_greedy
from .rescore import attention_rescore
from .prefix_beam import ctc_prefix_beam
from .attention_beam import attention_beam_search
from ..model import ModelState
from ..exception import UsageError
from ..frontend import FeatureBatch
from ..core.tensor import Tensor
from ..objectives import LossWeights
from ..common.types import TokenSeq
from ..common.constants import (
    DECODE_MODES, DEFAULT_BEAM_SIZE, DEFAULT_LENGTH_NORMALIZE,
    DEFAULT_RESCORE_CTC_WEIGHT,
)


logger = logging.getLogger(__name__)


def decode_features(
        model: ModelState,
        features: Sequence[np.ndarray],
        factor: int,
        mode: str = 'greedy',
        beam: int = DEFAULT_BEAM_SIZE,
        weights: Optional[LossWeights] = None,
        ctc_weight: float = DEFAULT_RESCORE_CTC_WEIGHT,
        length_normalize: bool = DEFAULT_LENGTH_NORMALIZE,
) -> List[TokenSeq]:
    """Decode each (T, I) utterance through branch ``factor``.

    greedy: CTC best path.  prefix_beam: best CTC prefix beam hypothesis.
    rescore: CTC prefix beam n-best rescored by the decoder.  attention:
    l2r decoder beam search.
    """
    if mode not in DECODE_MODES:
        raise UsageError('unknown decode mode %s, expected one of %s' % (mode, ', '.join(DECODE_MODES)))
    weights = weights or LossWeights()
    out: List[TokenSeq] = []
    with Tensor.no_grad():
        for frames in features:
            encoded, lengths = model.encode_branch(FeatureBatch.from_arrays([frames]), factor)
            log_probs = model.ctc_log_probs(encoded).data[0, :lengths[0]]
            if mode == 'greedy':
                out.append(ctc_greedy(log_probs))
            elif mode == 'prefix_beam':
                out.append(ctc_prefix_beam(log_probs, beam).best())
            elif mode == 'rescore':
                nbest = ctc_prefix_beam(log_probs, beam)
                out.append(
                    attention_rescore(
                        model, nbest, encoded, lengths[0], weights, ctc_weight, length_normalize,
                    ),
                )
            else:
                out.append(attention_beam_search(model, encoded, lengths[0], beam, max_length=lengths[0]))
    logger.debug('Decoded %d utterances with branch %d in %s mode', len(out), factor, mode)
    return out

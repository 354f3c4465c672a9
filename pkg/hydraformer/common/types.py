# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import os
from typing import Any, Dict, List, Tuple, Union

import numpy as np


TokenSeq = List[int]
Shape = Tuple[int, ...]
Array = np.ndarray
PathLike = Union[str, os.PathLike]
JsonDict = Dict[str, Any]

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Helpers shared by subcommand handlers.
"""
import os
import json
import argparse
from typing import Any, Dict, List, Tuple

from ..harness import Utterance, DatasetManifest, load_dataset
from ..exception import ConfigError
from ..common.types import PathLike
from ..common.utils import versioned


def emit(record: Dict[str, Any]) -> None:
    """Print one versioned JSON line on stdout."""
    print(json.dumps(versioned(record), separators=(',', ':')), flush=True)


def relative_to(base_file: PathLike, path: str) -> str:
    if os.path.isabs(path):
        return path
    return os.path.join(os.path.dirname(os.fspath(base_file)) or '.', path)


def load_compatible(
        data: PathLike,
        vocab_size: int,
        feature_dim: int,
) -> Tuple[DatasetManifest, List[Utterance]]:
    manifest, utterances = load_dataset(data)
    if manifest.vocab_size != vocab_size:
        raise ConfigError(
            '%s has %d symbols, model expects %d' % (os.fspath(data), manifest.vocab_size, vocab_size),
            key='decoder.vocab_size',
        )
    if manifest.feature_dim != feature_dim:
        raise ConfigError(
            '%s has %d-dim features, model expects %d' % (os.fspath(data), manifest.feature_dim, feature_dim),
            key='frontend.input_dim',
        )
    return manifest, utterances


def add_data_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--ckpt', type=str, required=True, help='Checkpoint file.')
    parser.add_argument('--branch', type=int, required=True, help='Subsampling branch to run.')
    parser.add_argument('--data', type=str, required=True, help='Manifest file or dataset directory.')

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from .bench import RtfReport, run_once, bench_rtf, chunk_bounds
from .dataset import (
    Utterance, ManifestEntry, DatasetManifest, synthesize, load_dataset,
    default_vocab, gen_synthetic, read_manifest, write_manifest,
    load_utterances, read_features, write_features,
)
from .checkpoint import Checkpoint, save_checkpoint, load_checkpoint, encode_checkpoint
from .projection import ProjectedPoint, project_matrix, project_params, parse_selector

__all__ = [
    'Utterance',
    'ManifestEntry',
    'DatasetManifest',
    'synthesize',
    'gen_synthetic',
    'default_vocab',
    'read_manifest',
    'write_manifest',
    'load_utterances',
    'load_dataset',
    'read_features',
    'write_features',
    'Checkpoint',
    'encode_checkpoint',
    'save_checkpoint',
    'load_checkpoint',
    'RtfReport',
    'run_once',
    'bench_rtf',
    'chunk_bounds',
    'ProjectedPoint',
    'parse_selector',
    'project_matrix',
    'project_params',
]

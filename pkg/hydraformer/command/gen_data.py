# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    ``hydraformer gen-data`` subcommand.
"""
import argparse

from ._common import emit
from ..harness import gen_synthetic
from ..common.flag import flags
from ..common.constants import (
    DEFAULT_SEED, DEFAULT_NOISE_STD, DEFAULT_VOCAB_SIZE, DEFAULT_FEATURE_DIM,
    DEFAULT_SYNTHETIC_UTTS, DEFAULT_FRAMES_PER_TOKEN,
)


def run_gen_data(args: argparse.Namespace) -> int:
    manifest, utterances = gen_synthetic(
        args.utts,
        args.vocab,
        args.frames_per_token,
        args.noise_std,
        args.seed,
        out_dir=args.out,
        feature_dim=args.feature_dim,
    )
    emit({
        'command': 'gen-data',
        'utterances': len(utterances),
        'frames': sum(u.frames for u in utterances),
        'vocab_size': manifest.vocab_size,
        'out': args.out,
    })
    return 0


parser = flags.add_subcommand('gen-data', run_gen_data, help='Write a synthetic dataset.')
parser.add_argument('--out', type=str, required=True, help='Output dataset directory.')
parser.add_argument('--utts', type=int, default=DEFAULT_SYNTHETIC_UTTS, help='Default: %d.' % DEFAULT_SYNTHETIC_UTTS)
parser.add_argument(
    '--vocab', type=int, default=DEFAULT_VOCAB_SIZE,
    help='Default: %d.  Vocabulary size including blank, sos and eos.' % DEFAULT_VOCAB_SIZE,
)
parser.add_argument('--seed', type=int, default=DEFAULT_SEED, help='Default: %d.' % DEFAULT_SEED)
parser.add_argument(
    '--frames-per-token', type=int, default=DEFAULT_FRAMES_PER_TOKEN,
    help='Default: %d.' % DEFAULT_FRAMES_PER_TOKEN,
)
parser.add_argument('--noise-std', type=float, default=DEFAULT_NOISE_STD, help='Default: %s.' % DEFAULT_NOISE_STD)
parser.add_argument(
    '--feature-dim', type=int, default=DEFAULT_FEATURE_DIM,
    help='Default: %d.' % DEFAULT_FEATURE_DIM,
)

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    ``hydraformer bench`` subcommand.
"""
import argparse

import numpy as np

from ._common import emit, add_data_flags, load_compatible
from ..harness import bench_rtf, load_checkpoint
from ..common.flag import flags
from ..common.constants import BENCH_MODES, DEFAULT_CHUNK_FRAMES, DEFAULT_BENCH_REPETITIONS


def run_bench(args: argparse.Namespace) -> int:
    model = load_checkpoint(args.ckpt).model
    if args.float32:
        for param in model:
            param.tensor.data = param.data.astype(np.float32)
    _, utterances = load_compatible(args.data, model.decoder.vocab_size, model.frontend.input_dim)
    report = bench_rtf(
        model, args.branch, utterances, args.mode, args.repetitions, args.chunk_frames, args.threads,
    )
    emit(report.to_json())
    return 0


parser = flags.add_subcommand('bench', run_bench, help='Measure the real-time factor of one branch.')
add_data_flags(parser)
parser.add_argument('--mode', type=str, choices=BENCH_MODES, default='full', help='Default: full.')
parser.add_argument(
    '--repetitions', type=int, default=DEFAULT_BENCH_REPETITIONS,
    help='Default: %d.  Timed passes, the median is reported.' % DEFAULT_BENCH_REPETITIONS,
)
parser.add_argument(
    '--chunk-frames', type=int, default=DEFAULT_CHUNK_FRAMES,
    help='Default: %d.  Window width of chunked mode.' % DEFAULT_CHUNK_FRAMES,
)
parser.add_argument(
    '--threads', type=int, default=1,
    help='Default: 1.  Reports with more threads are marked non comparable.',
)
parser.add_argument(
    '--float32', action='store_true', default=False,
    help='Default: False.  Run inference with 32-bit parameters.',
)

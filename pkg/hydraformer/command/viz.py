# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    ``hydraformer viz`` subcommand.
"""
import os
import argparse
from typing import List

from ._common import emit
from ..harness import load_checkpoint, project_params
from ..exception import UsageError
from ..common.flag import flags
from ..common.constants import COMMA, PROJECTION_METHODS


def default_labels(paths: List[str]) -> List[str]:
    """File stems, qualified by their directory when stems collide.

    >>> default_labels(['a/best.ckpt', 'b/best.ckpt'])
    ['a/best', 'b/best']
    >>> default_labels(['base4.ckpt', 'hydra.ckpt'])
    ['base4', 'hydra']
    """
    stems = [os.path.splitext(os.path.basename(p))[0] for p in paths]
    if len(set(stems)) == len(stems):
        return stems
    return [os.path.splitext(os.path.normpath(p))[0].replace(os.sep, '/') for p in paths]


def run_viz(args: argparse.Namespace) -> int:
    paths = [p for p in args.ckpts.split(COMMA) if p]
    labels = args.labels.split(COMMA) if args.labels else default_labels(paths)
    if len(labels) != len(paths):
        raise UsageError('%d labels for %d checkpoints' % (len(labels), len(paths)))
    snapshots = [load_checkpoint(p).model.snapshot() for p in paths]
    points = project_params(snapshots, args.select, args.out, labels, args.method, args.seed)
    emit({'command': 'viz', 'points': len(points), 'method': args.method, 'out': args.out})
    return 0


parser = flags.add_subcommand('viz', run_viz, help='Project parameter slices of checkpoints to 2-D.')
parser.add_argument('--ckpts', type=str, required=True, help='Comma separated checkpoint files.')
parser.add_argument(
    '--select', type=str, required=True,
    help='Comma separated name[slice] terms, * matches an encoder block index.',
)
parser.add_argument('--out', type=str, required=True, help='Output directory for CSV and SVG.')
parser.add_argument('--labels', type=str, default=None, help='Default: checkpoint file stems.')
parser.add_argument('--method', type=str, choices=PROJECTION_METHODS, default='pca', help='Default: pca.')
parser.add_argument('--seed', type=int, default=0, help='Default: 0.  t-SNE random state.')

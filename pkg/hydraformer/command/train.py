# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    ``hydraformer train`` subcommand.
"""
import os
import logging
import argparse

from ._common import emit, relative_to, load_compatible
from ..model import initialize
from ..training import (
    TrainLock, MetricsWriter, train, load_run_config, read_init_plan,
    init_from_run_config,
)
from ..exception import ConfigError
from ..common.flag import flags
from ..common.constants import (
    LOCK_FILE, METRICS_FILE, PROMETHEUS_FILE, RUN_CONFIG_FILE,
    DEFAULT_ENABLE_METRICS,
)


logger = logging.getLogger(__name__)


def run_train(args: argparse.Namespace) -> int:
    run = load_run_config(args.config)
    if args.data:
        data = args.data
    elif run.train.data is not None:
        data = relative_to(args.config, run.train.data)
    else:
        raise ConfigError('no training data, pass --data or set it', key='train.data')
    manifest, utterances = load_compatible(data, run.decoder.vocab_size, run.frontend.input_dim)
    eval_set = []
    if run.train.eval_data is not None:
        _, eval_set = load_compatible(
            relative_to(args.config, run.train.eval_data), run.decoder.vocab_size, run.frontend.input_dim,
        )
    os.makedirs(args.out, exist_ok=True)
    with TrainLock(os.path.join(args.out, LOCK_FILE)):
        if args.init_plan:
            plan = read_init_plan(args.init_plan, run.frontend.factors)
            model = init_from_run_config(plan, run)
        else:
            model = initialize(run.frontend, run.encoder, run.decoder, run.train.seed)
        with open(os.path.join(args.out, RUN_CONFIG_FILE), 'w', encoding='utf-8') as f:
            f.write(run.dumps())
        prometheus = os.path.join(args.out, PROMETHEUS_FILE) if args.enable_metrics else None
        with MetricsWriter(os.path.join(args.out, METRICS_FILE), prometheus) as metrics:
            _, records = train(
                model, utterances, run.train, run.loss, args.out, eval_set, manifest.vocab, metrics,
            )
    emit({
        'command': 'train',
        'steps': len(records),
        'final_loss': records[-1].loss_total if records else None,
        'out': args.out,
    })
    return 0


parser = flags.add_subcommand('train', run_train, help='Train a multi-branch model.')
parser.add_argument('--config', type=str, required=True, help='Run configuration file.')
parser.add_argument('--out', type=str, required=True, help='Run directory for checkpoints and metrics.')
parser.add_argument(
    '--data', type=str, default=None,
    help='Default: train.data from the config. Training manifest or dataset directory.',
)
parser.add_argument('--init-plan', type=str, default=None, help='Initialization plan file.')
parser.add_argument(
    '--enable-metrics',
    action='store_true',
    default=DEFAULT_ENABLE_METRICS,
    help='Default: False.  Also writes a Prometheus textfile into the run directory.',
)

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    ``hydraformer transfer`` subcommand.
"""
import argparse

from ._common import emit
from ..harness import default_vocab, save_checkpoint
from ..training import load_run_config, read_init_plan, plan_config_path, init_from_run_config
from ..exception import UsageError
from ..common.flag import flags


def run_transfer(args: argparse.Namespace) -> int:
    config = args.config or plan_config_path(args.plan)
    if config is None:
        raise UsageError('the plan names no config, pass --config')
    run = load_run_config(config)
    plan = read_init_plan(args.plan, run.frontend.factors)
    model = init_from_run_config(plan, run)
    save_checkpoint(args.out, model, default_vocab(run.decoder.vocab_size), 0)
    emit({
        'command': 'transfer',
        'plan': plan.describe(run.frontend.factors),
        'parameters': len(model),
        'out': args.out,
    })
    return 0


parser = flags.add_subcommand('transfer', run_transfer, help='Build an initial checkpoint from a plan.')
parser.add_argument('--plan', type=str, required=True, help='Initialization plan file.')
parser.add_argument('--out', type=str, required=True, help='Checkpoint to write.')
parser.add_argument(
    '--config', type=str, default=None,
    help='Default: the config named by the plan.  Target run configuration.',
)

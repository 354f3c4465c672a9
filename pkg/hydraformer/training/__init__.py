# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
from .lock import TrainLock
from .loop import Trainer, train, batch_stream
from .step import StepRecord, usable, evaluate, train_step, forward_loss
from .config import RunConfig, TrainConfig, load_run_config, parse_run_config
from .metrics import MetricsWriter, read_metrics
from .schedule import noam_lr
from .transfer import (
    InitPlan, init_model, read_init_plan, parse_init_plan, plan_from_values,
    plan_config_path, init_from_run_config,
)
from .optimizer import LazyAdam, global_norm
from .selection import select_branch

__all__ = [
    'TrainConfig',
    'RunConfig',
    'load_run_config',
    'parse_run_config',
    'noam_lr',
    'LazyAdam',
    'global_norm',
    'select_branch',
    'StepRecord',
    'usable',
    'forward_loss',
    'train_step',
    'evaluate',
    'Trainer',
    'train',
    'batch_stream',
    'MetricsWriter',
    'read_metrics',
    'TrainLock',
    'InitPlan',
    'plan_from_values',
    'read_init_plan',
    'parse_init_plan',
    'plan_config_path',
    'init_model',
    'init_from_run_config',
]

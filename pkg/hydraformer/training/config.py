# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Run configuration.

    One flat file configures a whole run; keys are grouped by prefix::

        format_version = 1
        frontend.factors = 4,6,8
        encoder.num_blocks = 2
        decoder.vocab_size = 12
        loss.ctc_weight = 0.3
        train.steps = 2000
"""
import logging
from typing import Dict, Tuple, Optional, NamedTuple

from ..model import EncoderConfig, DecoderConfig, validate_configs
from ..frontend import FrontendConfig
from ..exception import ConfigError
from ..objectives import LossWeights
from ..common.types import PathLike
from ..common.config import build_record, dump_records, read_kv_file, parse_kv_text
from ..common.constants import (
    DOT, DEFAULT_SEED, DEFAULT_STEPS, DEFAULT_PEAK_LR, DEFAULT_GRAD_CLIP,
    DEFAULT_BATCH_SIZE, DEFAULT_WARMUP_STEPS, DEFAULT_METRICS_INTERVAL,
    DEFAULT_CHECKPOINT_INTERVAL,
)


logger = logging.getLogger(__name__)

SECTIONS = ('frontend', 'encoder', 'decoder', 'loss', 'train')


class TrainConfig(NamedTuple):
    seed: int = DEFAULT_SEED
    steps: int = DEFAULT_STEPS
    batch_size: int = DEFAULT_BATCH_SIZE
    peak_lr: float = DEFAULT_PEAK_LR
    warmup_steps: int = DEFAULT_WARMUP_STEPS
    grad_clip: float = DEFAULT_GRAD_CLIP
    # empty means every configured frontend branch
    branches: Tuple[int, ...] = ()
    checkpoint_interval: int = DEFAULT_CHECKPOINT_INTERVAL
    metrics_interval: int = DEFAULT_METRICS_INTERVAL
    data: Optional[str] = None
    eval_data: Optional[str] = None

    def branch_set(self, frontend: FrontendConfig) -> Tuple[int, ...]:
        branches = tuple(self.branches) or tuple(frontend.factors)
        unknown = sorted(set(branches) - set(frontend.factors))
        if unknown:
            raise ConfigError(
                'branches %s are not configured in frontend.factors' % unknown, key='train.branches',
            )
        return tuple(sorted(set(branches)))

    def validate(self, frontend: Optional[FrontendConfig] = None) -> 'TrainConfig':
        if self.steps < 0:
            raise ConfigError('must be >= 0', key='train.steps')
        if self.batch_size < 1:
            raise ConfigError('must be >= 1', key='train.batch_size')
        if self.warmup_steps < 1:
            raise ConfigError('must be >= 1', key='train.warmup_steps')
        if self.peak_lr <= 0:
            raise ConfigError('must be positive', key='train.peak_lr')
        if self.grad_clip < 0:
            raise ConfigError('must be >= 0, 0 disables clipping', key='train.grad_clip')
        if self.checkpoint_interval < 1 or self.metrics_interval < 1:
            raise ConfigError('intervals must be >= 1', key='train.checkpoint_interval')
        if frontend is not None:
            self.branch_set(frontend)
        return self


class RunConfig(NamedTuple):
    frontend: FrontendConfig
    encoder: EncoderConfig
    decoder: DecoderConfig
    loss: LossWeights
    train: TrainConfig

    def validate(self) -> 'RunConfig':
        validate_configs(self.frontend, self.encoder, self.decoder)
        self.loss.validate()
        self.train.validate(self.frontend)
        return self

    def dumps(self) -> str:
        return dump_records([(name + DOT, getattr(self, name)) for name in SECTIONS])


def run_config_from_values(values: Dict[str, str]) -> RunConfig:
    for key in values:
        if key.split(DOT, 1)[0] not in SECTIONS or DOT not in key:
            raise ConfigError('unknown section, expected one of %s' % ', '.join(SECTIONS), key=key)
    return RunConfig(
        frontend=build_record(FrontendConfig, values, 'frontend.'),
        encoder=build_record(EncoderConfig, values, 'encoder.'),
        decoder=build_record(DecoderConfig, values, 'decoder.'),
        loss=build_record(LossWeights, values, 'loss.'),
        train=build_record(TrainConfig, values, 'train.'),
    ).validate()


def load_run_config(path: PathLike) -> RunConfig:
    return run_config_from_values(read_kv_file(path))


def parse_run_config(text: str) -> RunConfig:
    return run_config_from_values(parse_kv_text(text))

# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Initialization plans.

    A plan says where each frontend branch and the shared encoder/decoder
    take their initial weights from: ``scratch`` or a checkpoint.  Plans
    are flat key-value files::

        format_version = 1
        source.4 = ../base4/best.ckpt
        source.6 = ../base6/best.ckpt
        hydrasub = 4_6_s
        encoder_decoder = 4

    ``hydrasub`` lists one entry per configured branch in ascending factor
    order, ``s`` meaning scratch and a number naming the ``source.<n>``
    baseline whose ``frontend.sub<n>`` weights that branch receives.
    ``branch.<n> = <value>`` sets a single branch instead.  Values may
    also be checkpoint paths.  Everything not taken from a checkpoint is
    seeded exactly as a fresh model would be.
"""
import os
import logging
from typing import Dict, List, Tuple, Mapping, Optional, NamedTuple

from .config import RunConfig
from ..model import ModelState, EncoderConfig, DecoderConfig, initialize
from ..harness import load_checkpoint
from ..frontend import FrontendConfig
from ..exception import ConfigError, TransferError
from ..common.types import PathLike
from ..common.config import read_kv_file, parse_kv_text
from ..common.constants import DOT, SCRATCH, UNDERSCORE


logger = logging.getLogger(__name__)

SHARED_PREFIXES = ('encoder.', 'decoder.', 'heads.')


BranchSource = Optional[Tuple[str, int]]


class InitPlan(NamedTuple):
    # target factor -> (checkpoint path, source factor), None for scratch
    branch_sources: Mapping[int, BranchSource]
    # SCRATCH or checkpoint path
    encoder_decoder: str = SCRATCH
    config: Optional[str] = None
    seed: Optional[int] = None

    def describe(self, factors: Tuple[int, ...]) -> str:
        """Table notation of the plan, e.g. ``4_s_s + encoder_decoder=scratch``."""
        entries = []
        for factor in factors:
            source = self.branch_sources.get(factor)
            entries.append('s' if source is None else str(source[1]))
        shared = 's' if self.encoder_decoder == SCRATCH else os.path.basename(self.encoder_decoder)
        return '%s + encoder_decoder=%s' % (UNDERSCORE.join(entries), shared)


def _is_scratch(value: str) -> bool:
    return value.lower() in ('s', SCRATCH)


def plan_from_values(
        values: Mapping[str, str],
        factors: Tuple[int, ...],
        base_dir: str = '.',
) -> InitPlan:
    """Resolve plan keys against the target branch list."""
    sources: Dict[int, str] = {}
    rest: Dict[str, str] = {}
    for key, value in values.items():
        if key.startswith('source' + DOT):
            try:
                sources[int(key.split(DOT, 1)[1])] = os.path.join(base_dir, value)
            except ValueError as e:
                raise ConfigError('source rate must be an integer', key=key) from e
        else:
            rest[key] = value

    def resolve(value: str, key: str, default_factor: int) -> BranchSource:
        if _is_scratch(value):
            return None
        if value.isdigit():
            rate = int(value)
            if rate not in sources:
                raise ConfigError('no source.%d given' % rate, key=key)
            return (sources[rate], rate)
        return (os.path.join(base_dir, value), default_factor)

    branch_sources: Dict[int, BranchSource] = {factor: None for factor in factors}
    encoder_decoder = SCRATCH
    config: Optional[str] = None
    seed: Optional[int] = None
    for key, value in rest.items():
        if key == 'hydrasub':
            entries = value.split(UNDERSCORE)
            if len(entries) != len(factors):
                raise ConfigError(
                    '%d entries for %d configured branches %s' % (len(entries), len(factors), list(factors)),
                    key=key,
                )
            for factor, entry in zip(factors, entries):
                branch_sources[factor] = resolve(entry, key, factor)
        elif key.startswith('branch' + DOT):
            factor = int(key.split(DOT, 1)[1]) if key.split(DOT, 1)[1].isdigit() else -1
            if factor not in factors:
                raise ConfigError('not a configured branch %s' % list(factors), key=key)
            branch_sources[factor] = resolve(value, key, factor)
        elif key == 'encoder_decoder':
            shared = resolve(value, key, 0)
            encoder_decoder = SCRATCH if shared is None else shared[0]
        elif key == 'config':
            config = os.path.join(base_dir, value)
        elif key == 'seed':
            seed = int(value)
        else:
            raise ConfigError('unknown key', key=key)
    return InitPlan(branch_sources, encoder_decoder, config, seed)


def read_init_plan(path: PathLike, factors: Tuple[int, ...]) -> InitPlan:
    return plan_from_values(read_kv_file(path), factors, os.path.dirname(os.fspath(path)) or '.')


def parse_init_plan(text: str, factors: Tuple[int, ...], base_dir: str = '.') -> InitPlan:
    return plan_from_values(parse_kv_text(text), factors, base_dir)


def plan_config_path(path: PathLike) -> Optional[str]:
    """The run config a plan file points at, if any."""
    values = read_kv_file(path)
    if 'config' not in values:
        return None
    return os.path.join(os.path.dirname(os.fspath(path)) or '.', values['config'])


def _copy(target: ModelState, source: ModelState, pairs: List[Tuple[str, str]], origin: str) -> None:
    staged = []
    for target_name, source_name in pairs:
        if source_name not in source:
            raise TransferError(target_name, '%s has no %s' % (origin, source_name))
        value = source[source_name].data
        if value.shape != target[target_name].shape:
            raise TransferError(
                target_name,
                'shape %s in %s, target expects %s' % (value.shape, origin, target[target_name].shape),
            )
        staged.append((target_name, value))
    for name, value in staged:
        target[name].data[...] = value


def init_model(
        plan: InitPlan,
        frontend: FrontendConfig,
        encoder: EncoderConfig,
        decoder: DecoderConfig,
        seed: int,
) -> ModelState:
    """Fresh model from ``seed``, then overwritten per ``plan``."""
    model = initialize(frontend, encoder, decoder, seed)
    loaded: Dict[str, ModelState] = {}

    def source(path: str) -> ModelState:
        if path not in loaded:
            loaded[path] = load_checkpoint(path).model
        return loaded[path]

    for factor in frontend.factors:
        entry = plan.branch_sources.get(factor)
        if entry is None:
            continue
        path, rate = entry
        prefix = 'frontend.sub%d.' % factor
        source_prefix = 'frontend.sub%d.' % rate
        pairs = [(n, source_prefix + n[len(prefix):]) for n in model.names(prefix)]
        _copy(model, source(path), pairs, path)
        logger.info('Branch %d initialized from %s (sub%d)', factor, path, rate)
    if plan.encoder_decoder != SCRATCH:
        names = [n for n in model.names() if n.startswith(SHARED_PREFIXES)]
        _copy(model, source(plan.encoder_decoder), [(n, n) for n in names], plan.encoder_decoder)
        logger.info('Encoder, decoder and heads initialized from %s', plan.encoder_decoder)
    return model


def init_from_run_config(plan: InitPlan, run: RunConfig) -> ModelState:
    seed = run.train.seed if plan.seed is None else plan.seed
    return init_model(plan, run.frontend, run.encoder, run.decoder, seed)

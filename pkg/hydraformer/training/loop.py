# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.

    Dynamic subsample training: every batch trains one uniformly drawn
    branch together with the shared encoder, decoder and heads.
"""
import os
import logging
from typing import List, Tuple, Iterator, Optional, Sequence

import numpy as np

from .step import StepRecord, evaluate, train_step
from .config import TrainConfig
from .metrics import MetricsWriter
from .schedule import noam_lr
from .optimizer import LazyAdam
from .selection import select_branch
from ..model import ModelState
from ..harness import Utterance, save_checkpoint
from ..exception import UsageError, TooShortError, TrainingHalted, NonFiniteLossError
from ..objectives import LossWeights
from ..common.utils import single_threaded
from ..common.constants import LAST_CHECKPOINT, BEST_CHECKPOINT, MAX_CONSECUTIVE_NON_FINITE


logger = logging.getLogger(__name__)


def batch_stream(
        utterances: Sequence[Utterance],
        batch_size: int,
        rng: np.random.Generator,
) -> Iterator[List[Utterance]]:
    """Endless batches; each pass over the data is a fresh permutation from ``rng``."""
    while True:
        order = rng.permutation(len(utterances))
        for start in range(0, len(order), batch_size):
            yield [utterances[i] for i in order[start:start + batch_size]]


class Trainer:
    """Owns the random streams, optimizer and checkpoint bookkeeping of one run."""

    def __init__(
            self,
            model: ModelState,
            config: TrainConfig,
            weights: LossWeights,
            out_dir: Optional[str] = None,
            vocab: Tuple[str, ...] = (),
            metrics: Optional[MetricsWriter] = None,
    ) -> None:
        self.model = model
        self.config = config.validate(model.frontend)
        self.weights = weights.validate()
        self.out_dir = out_dir
        self.vocab = vocab
        self.metrics = metrics
        self.branches = config.branch_set(model.frontend)
        selection, shuffle, dropout = np.random.SeedSequence(config.seed).spawn(3)
        self.selection_rng = np.random.default_rng(selection)
        self.shuffle_rng = np.random.default_rng(shuffle)
        self.dropout_rng = np.random.default_rng(dropout)
        self.optimizer = LazyAdam(grad_clip=config.grad_clip)
        self.records: List[StepRecord] = []
        self.best_loss = float('inf')
        self.consecutive_non_finite = 0

    def save(self, step: int, eval_set: Sequence[Utterance]) -> None:
        if self.out_dir is None:
            return
        save_checkpoint(os.path.join(self.out_dir, LAST_CHECKPOINT), self.model, self.vocab, step)
        if eval_set:
            loss = evaluate(self.model, eval_set, self.weights, self.branches, self.config.batch_size)
            logger.info('step %d: held-out loss %.6f (best %.6f)', step, loss, self.best_loss)
            if loss >= self.best_loss:
                return
            self.best_loss = loss
        save_checkpoint(os.path.join(self.out_dir, BEST_CHECKPOINT), self.model, self.vocab, step)

    def step(self, step: int, batch: Sequence[Utterance]) -> Optional[StepRecord]:
        factor = select_branch(self.selection_rng, self.branches)
        lr = noam_lr(step, self.config.peak_lr, self.config.warmup_steps)
        try:
            record = train_step(
                self.model, batch, factor, self.weights, self.optimizer, lr, step, self.dropout_rng,
            )
        except TooShortError as e:
            logger.warning('step %d skipped: %s', step, e)
            return None
        except NonFiniteLossError as e:
            self.consecutive_non_finite += 1
            logger.warning('step %d aborted (%d in a row): %s', step, self.consecutive_non_finite, e)
            if self.consecutive_non_finite >= MAX_CONSECUTIVE_NON_FINITE:
                raise TrainingHalted(step, self.consecutive_non_finite) from e
            return None
        self.consecutive_non_finite = 0
        self.records.append(record)
        if self.metrics is not None:
            self.metrics.write(record)
        return record

    def run(
            self,
            utterances: Sequence[Utterance],
            eval_set: Sequence[Utterance] = (),
    ) -> List[StepRecord]:
        if not utterances:
            raise UsageError('training set is empty')
        batches = batch_stream(utterances, self.config.batch_size, self.shuffle_rng)
        logger.info(
            'Training %d steps on %d utterances, branches %s',
            self.config.steps, len(utterances), list(self.branches),
        )
        # runs are bit-identical only on a single BLAS thread
        with single_threaded():
            for step in range(1, self.config.steps + 1):
                record = self.step(step, next(batches))
                if record is not None and step % self.config.metrics_interval == 0:
                    logger.info(
                        'step %d branch %d loss %.4f ctc %.4f lr %.2e',
                        step, record.branch, record.loss_total, record.loss_ctc, record.lr,
                    )
                    if self.metrics is not None:
                        self.metrics.flush()
                if step % self.config.checkpoint_interval == 0 and step != self.config.steps:
                    self.save(step, eval_set)
            self.save(self.config.steps, eval_set)
        return self.records


def train(
        model: ModelState,
        utterances: Sequence[Utterance],
        config: TrainConfig,
        weights: Optional[LossWeights] = None,
        out_dir: Optional[str] = None,
        eval_set: Sequence[Utterance] = (),
        vocab: Tuple[str, ...] = (),
        metrics: Optional[MetricsWriter] = None,
) -> Tuple[ModelState, List[StepRecord]]:
    """Train ``model`` in place for ``config.steps`` steps.

    Fully determined by (model, utterances, config, weights).  With
    ``out_dir`` given, ``last.ckpt`` and ``best.ckpt`` are written there
    every ``checkpoint_interval`` steps and at the end.
    """
    trainer = Trainer(model, config, weights or LossWeights(), out_dir, vocab, metrics)
    return model, trainer.run(utterances, eval_set)

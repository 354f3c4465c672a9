# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import os
import tempfile
import unittest

from hydraformer.training import TrainConfig, RunConfig, load_run_config, parse_run_config
from hydraformer.exception import ConfigError
from hydraformer.frontend import FrontendConfig


RUN = '''format_version = 1
# tiny run
frontend.factors = 4,8
frontend.input_dim = 16
frontend.model_dim = 8
encoder.model_dim = 8
encoder.heads = 2
decoder.model_dim = 8
decoder.heads = 2
decoder.vocab_size = 6
loss.ctc_weight = 0.5
train.steps = 3
train.branches = 8
'''


class TestRunConfig(unittest.TestCase):

    def test_parse(self) -> None:
        run = parse_run_config(RUN)
        self.assertEqual(run.frontend.factors, (4, 8))
        self.assertEqual(run.loss.ctc_weight, 0.5)
        self.assertEqual(run.loss.reverse_weight, 0.3)
        self.assertEqual(run.train.steps, 3)
        self.assertEqual(run.train.branch_set(run.frontend), (8,))
        self.assertIsNone(run.train.data)

    def test_dumps_round_trip(self) -> None:
        run = parse_run_config(RUN)
        self.assertEqual(parse_run_config(run.dumps()), run)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'run.cfg')
            with open(path, 'w', encoding='utf-8') as f:
                f.write(run.dumps())
            self.assertEqual(load_run_config(path), run)

    def test_rejections(self) -> None:
        bad = (
            RUN + 'optimizer.lr = 1\n',
            RUN + 'steps = 1\n',
            RUN + 'train.stepz = 1\n',
            RUN.replace('train.branches = 8', 'train.branches = 6'),
            RUN.replace('encoder.model_dim = 8', 'encoder.model_dim = 4'),
            RUN.replace('loss.ctc_weight = 0.5', 'loss.ctc_weight = 2'),
            RUN.replace('train.steps = 3', 'train.steps = three'),
        )
        for text in bad:
            with self.assertRaises(ConfigError, msg=text.splitlines()[-1]):
                parse_run_config(text)

    def test_train_config_validation(self) -> None:
        frontend = FrontendConfig(factors=(4, 6))
        self.assertEqual(TrainConfig().validate(frontend).branch_set(frontend), (4, 6))
        for bad in (
                TrainConfig(steps=-1), TrainConfig(batch_size=0), TrainConfig(warmup_steps=0),
                TrainConfig(peak_lr=0.0), TrainConfig(grad_clip=-1.0), TrainConfig(metrics_interval=0),
        ):
            with self.assertRaises(ConfigError):
                bad.validate()

    def test_default_run_is_valid(self) -> None:
        self.assertIsInstance(parse_run_config('format_version = 1\n'), RunConfig)

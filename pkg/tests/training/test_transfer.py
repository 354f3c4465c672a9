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

import numpy as np

from hydraformer.harness import save_checkpoint
from hydraformer.testing import TestCase
from hydraformer.training import (
    InitPlan, init_model, read_init_plan, parse_init_plan, plan_config_path,
    init_from_run_config, parse_run_config,
)
from hydraformer.exception import ConfigError, TransferError
from hydraformer.frontend import FeatureBatch


class TestTransfer(TestCase):

    @classmethod
    def setUpClass(cls) -> None:
        super().setUpClass()
        assert cls.TEMP_DIR
        for factor in cls.FACTORS:
            baseline = cls.tiny_model(seed=100 + factor, factors=(factor,))
            save_checkpoint(os.path.join(cls.TEMP_DIR, 'base%d.ckpt' % factor), baseline)

    def path(self, factor: int) -> str:
        assert self.TEMP_DIR
        return os.path.join(self.TEMP_DIR, 'base%d.ckpt' % factor)

    def plan(self, text: str) -> InitPlan:
        assert self.TEMP_DIR
        return parse_init_plan('format_version = 1\n' + text, self.FACTORS, self.TEMP_DIR)

    def build(self, plan: InitPlan, seed: int = 0):   # type: ignore[no-untyped-def]
        return init_model(plan, *self.tiny_configs(), seed=seed)

    def log_probs(self, model, factor: int) -> np.ndarray:   # type: ignore[no-untyped-def]
        features = self.tiny_dataset(num_utts=1, seed=40)[0].features
        encoded, _ = model.encode_branch(FeatureBatch.from_arrays([features]), factor)
        return model.ctc_log_probs(encoded).data

    def test_branch_and_shared_transfer_reproduces_baseline(self) -> None:
        plan = self.plan('source.6 = base6.ckpt\nhydrasub = s_6_s\nencoder_decoder = 6\n')
        model = self.build(plan)
        baseline = self.tiny_model(seed=106, factors=(6,))
        np.testing.assert_allclose(self.log_probs(model, 6), self.log_probs(baseline, 6), atol=1e-9)

    def test_every_branch_from_its_own_baseline(self) -> None:
        plan = self.plan('source.4 = base4.ckpt\nsource.6 = base6.ckpt\nsource.8 = base8.ckpt\nhydrasub = 4_6_8\n')
        model = self.build(plan, seed=5)
        fresh = self.tiny_model(seed=5)
        for factor in self.FACTORS:
            baseline = self.tiny_model(seed=100 + factor, factors=(factor,))
            for name in baseline.names('frontend.'):
                np.testing.assert_array_equal(model[name].data, baseline[name].data)
        for name in model.names('encoder.'):
            np.testing.assert_array_equal(model[name].data, fresh[name].data)
        self.assertEqual(plan.describe(self.FACTORS), '4_6_8 + encoder_decoder=s')

    def test_scratch_plan_is_a_fresh_model(self) -> None:
        model = self.build(self.plan('hydrasub = s_s_s\n'), seed=3)
        fresh = self.tiny_model(seed=3)
        for name in model.names():
            np.testing.assert_array_equal(model[name].data, fresh[name].data)

    def test_branch_key_and_path_values(self) -> None:
        plan = self.plan('branch.8 = base8.ckpt\nencoder_decoder = base4.ckpt\n')
        self.assertEqual(plan.branch_sources[8], (self.path(8), 8))
        self.assertIsNone(plan.branch_sources[4])
        self.assertEqual(plan.encoder_decoder, self.path(4))
        model = self.build(plan)
        baseline = self.tiny_model(seed=104, factors=(4,))
        np.testing.assert_array_equal(model['heads.ctc.weight'].data, baseline['heads.ctc.weight'].data)

    def test_mismatched_topology_is_rejected(self) -> None:
        plan = self.plan('source.4 = base4.ckpt\nhydrasub = s_4_s\n')
        with self.assertRaises(TransferError) as ctx:
            self.build(plan)
        self.assertTrue(str(ctx.exception).startswith('frontend.sub6.'))

    def test_missing_source_branch(self) -> None:
        plan = self.plan('branch.6 = base8.ckpt\n')
        with self.assertRaises(TransferError):
            self.build(plan)

    def test_plan_errors(self) -> None:
        for text in (
                'hydrasub = 4_6\n',
                'hydrasub = 4_s_s\n',
                'branch.5 = s\n',
                'source.x = base4.ckpt\n',
                'encoder = s\n',
        ):
            with self.assertRaises(ConfigError, msg=text):
                self.plan(text)

    def test_plan_file_with_config(self) -> None:
        assert self.TEMP_DIR
        frontend, encoder, decoder = self.tiny_configs()
        run_text = (
            'format_version = 1\nfrontend.factors = 4,6,8\nfrontend.input_dim = %d\nfrontend.model_dim = %d\n'
            'encoder.num_blocks = 1\nencoder.model_dim = %d\nencoder.heads = 2\nencoder.ffn_dim = 16\n'
            'encoder.depthwise_kernel = 3\ndecoder.num_blocks_l2r = 1\ndecoder.num_blocks_r2l = 1\n'
            'decoder.model_dim = %d\ndecoder.heads = 2\ndecoder.ffn_dim = 16\ndecoder.vocab_size = %d\n'
            'train.seed = 11\n'
        ) % (self.FEATURE_DIM, self.MODEL_DIM, self.MODEL_DIM, self.MODEL_DIM, self.VOCAB_SIZE)
        with open(os.path.join(self.TEMP_DIR, 'tiny.cfg'), 'w', encoding='utf-8') as f:
            f.write(run_text)
        plan_path = os.path.join(self.TEMP_DIR, 'init.plan')
        with open(plan_path, 'w', encoding='utf-8') as f:
            f.write('format_version = 1\nconfig = tiny.cfg\nsource.8 = base8.ckpt\nhydrasub = s_s_8\n')
        self.assertEqual(plan_config_path(plan_path), os.path.join(self.TEMP_DIR, 'tiny.cfg'))
        run = parse_run_config(run_text)
        self.assertEqual((run.frontend, run.encoder, run.decoder), (frontend, encoder, decoder))
        plan = read_init_plan(plan_path, run.frontend.factors)
        model = init_from_run_config(plan, run)
        fresh = self.tiny_model(seed=11)
        np.testing.assert_array_equal(model['frontend.sub4.out.weight'].data, fresh['frontend.sub4.out.weight'].data)
        baseline = self.tiny_model(seed=108, factors=(8,))
        np.testing.assert_array_equal(model['frontend.sub8.out.weight'].data, baseline['frontend.sub8.out.weight'].data)
        seeded = init_from_run_config(plan._replace(seed=12), run)
        np.testing.assert_array_equal(seeded['encoder.blocks.0.ffn1.w1.weight'].data, self.tiny_model(seed=12)['encoder.blocks.0.ffn1.w1.weight'].data)

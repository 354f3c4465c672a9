# -*- coding: utf-8 -*-
"""
    hydraformer
    ~~~~~~~~~~~
    Multi-rate convolutional subsampling, a shared Conformer encoder and a
    bidirectional Transformer decoder for speech recognition at desk scale.

    :copyright: (c) 2024-present by hydraformer contributors.
    :license: BSD, see LICENSE for more details.
"""
import numpy as np

from hydraformer.model import ModelState, DecoderConfig, initialize, validate_configs
from hydraformer.testing import TestCase
from hydraformer.exception import ConfigError
from hydraformer.frontend import FeatureBatch
from hydraformer.core.tensor import SHARED


class TestModelState(TestCase):

    def test_name_partition(self) -> None:
        model = self.tiny_model()
        prefixes = ('frontend.sub4.', 'frontend.sub6.', 'frontend.sub8.', 'encoder.', 'decoder.', 'heads.')
        for name in model.names():
            self.assertEqual(sum(name.startswith(p) for p in prefixes), 1, name)
        self.assertEqual(model['frontend.sub6.out.bias'].owner, 'sub6')
        self.assertEqual(model['heads.ctc.weight'].owner, SHARED)
        self.assertEqual(model.factors, self.FACTORS)
        self.assertEqual(len(model), len(list(model)))
        self.assertIn('encoder.blocks.0.final_norm.gain', model)

    def test_initialization_depends_on_seed_and_name_only(self) -> None:
        full = self.tiny_model(seed=9)
        single = self.tiny_model(seed=9, factors=(6,))
        for name in single.names():
            np.testing.assert_array_equal(single[name].data, full[name].data)
        other = self.tiny_model(seed=10)
        self.assertFalse(np.array_equal(other['encoder.blocks.0.mhsa.q.weight'].data, full['encoder.blocks.0.mhsa.q.weight'].data))

    def test_norms_start_at_identity(self) -> None:
        model = self.tiny_model()
        np.testing.assert_array_equal(model['encoder.blocks.0.final_norm.gain'].data, 1.0)
        np.testing.assert_array_equal(model['encoder.blocks.0.final_norm.offset'].data, 0.0)

    def test_snapshot_is_a_copy(self) -> None:
        model = self.tiny_model()
        snap = model.snapshot()
        model['heads.ctc.bias'].data[:] = 7.0
        self.assertFalse((snap['heads.ctc.bias'] == 7.0).any())
        self.assertEqual(model.num_values(), sum(v.size for v in snap.values()))

    def test_encode_branch_and_ctc_head(self) -> None:
        model = self.tiny_model()
        batch = FeatureBatch.from_arrays([np.ones((30, self.FEATURE_DIM)), np.ones((20, self.FEATURE_DIM))])
        for factor in self.FACTORS:
            encoded, lengths = model.encode_branch(batch, factor)
            log_probs = model.ctc_log_probs(encoded).data
            self.assertEqual(log_probs.shape, (2, lengths[0], self.VOCAB_SIZE))
            np.testing.assert_allclose(np.exp(log_probs).sum(axis=-1), 1.0, atol=1e-12)

    def test_encode_branch_rejects_unknown_branch(self) -> None:
        model = self.tiny_model(factors=(4,))
        batch = FeatureBatch.from_arrays([np.ones((30, self.FEATURE_DIM))])
        with self.assertRaises(ConfigError):
            model.encode_branch(batch, 8)

    def test_zero_grad(self) -> None:
        model = self.tiny_model()
        batch = FeatureBatch.from_arrays([np.ones((30, self.FEATURE_DIM))])
        encoded, _ = model.encode_branch(batch, 4)
        model.ctc_log_probs(encoded).sum().backward()
        self.assertIsNotNone(model['heads.ctc.weight'].grad)
        model.zero_grad()
        self.assertIsNone(model['heads.ctc.weight'].grad)

    def test_model_dim_mismatch(self) -> None:
        frontend, encoder, decoder = self.tiny_configs()
        with self.assertRaises(ConfigError):
            validate_configs(frontend, encoder, decoder._replace(model_dim=4, heads=2))
        with self.assertRaises(ConfigError):
            initialize(frontend, encoder, DecoderConfig(vocab_size=2, model_dim=self.MODEL_DIM, heads=2), seed=0)
        self.assertIsInstance(initialize(frontend, encoder, decoder, seed=0), ModelState)
